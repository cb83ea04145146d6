#include "prequant/doc.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace prequant {

using nlohmann::json;

namespace {

json header(const char* kind) { return json{{"format", kDocFormat}, {"version", kDocVersion}, {"kind", kind}}; }

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::malformed, msg); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string str(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> labels_of(const json& j) {
    const auto& e = field(j, "elements");
    if (!e.is_array() || e.empty()) bad("'elements' must be a nonempty array");
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& x : e) {
        out.push_back(str(x, "element label"));
        if (!seen.insert(out.back()).second) bad("duplicate element label " + out.back());
    }
    return out;
}

Index lookup(const std::vector<std::string>& labels, const json& x) {
    const auto s = str(x, "element reference");
    for (Index i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return i;
    bad("unknown element " + s);
}

std::vector<Index> table_of(const json& j, const std::vector<std::string>& labels) {
    const auto n = labels.size();
    const auto& t = field(j, "table");
    if (!t.is_array() || t.size() != n) bad("'table' must have one row per element");
    std::vector<Index> out;
    for (const auto& row : t) {
        if (!row.is_array() || row.size() != n) bad("table rows must have one entry per element");
        for (const auto& x : row) out.push_back(lookup(labels, x));
    }
    return out;
}

FinitePoset poset_of(const json& j) {
    auto labels = labels_of(j);
    const auto n = labels.size();
    const auto& l = field(j, "leq");
    if (!l.is_array() || l.size() != n) bad("'leq' must list the up-set of every element");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (Index i = 0; i < n; ++i) {
        if (!l[i].is_array()) bad("'leq' rows must be arrays");
        for (const auto& x : l[i]) leq[i][lookup(labels, x)] = true;
    }
    return FinitePoset(std::move(labels), leq);
}

OrderedMagma magma_of(const json& j) {
    auto p = poset_of(j);
    auto table = table_of(j, p.labels());
    std::string name = j.contains("name") ? str(j.at("name"), "name") : "";
    return OrderedMagma(std::move(p), std::move(table), std::move(name));
}

void check_header(const json& j) {
    if (!j.is_object()) bad("document must be a JSON object");
    if (str(field(j, "format"), "format") != kDocFormat) bad("unknown document format");
    if (!field(j, "version").is_number_integer() || j.at("version").get<int>() != kDocVersion)
        bad("unsupported document version");
}

std::vector<Index> map_table(const json& j, const FinitePoset& p) {
    const auto& t = field(j, "table");
    if (!t.is_array() || t.size() != p.size()) bad("map table must have one entry per element");
    std::vector<Index> out;
    for (const auto& x : t) out.push_back(lookup(p.labels(), x));
    return out;
}

OrderedMagma nested_magma(const json& j, const char* key) {
    auto d = parse_doc(field(j, key));
    if (!d.magma) bad(std::string("'") + key + "' must be a magma document");
    return *d.magma;
}

}  // namespace

json to_json(const FinitePoset& p) {
    auto j = header("poset");
    j["elements"] = p.labels();
    json leq = json::array();
    for (Index i = 0; i < p.size(); ++i) {
        json row = json::array();
        for (auto k : members(p.leq_row(i))) row.push_back(p.label(k));
        leq.push_back(row);
    }
    j["leq"] = leq;
    return j;
}

json to_json(const OrderedMagma& m) {
    auto j = to_json(m.poset());
    j["kind"] = "magma";
    j["name"] = m.name();
    json table = json::array();
    for (Index a = 0; a < m.size(); ++a) {
        json row = json::array();
        for (Index b = 0; b < m.size(); ++b) row.push_back(m.label(m.mul(a, b)));
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

json to_json(const FiniteMagmaDesc& m) {
    auto j = header("finite-magma");
    j["name"] = m.name;
    j["elements"] = m.labels;
    json table = json::array();
    for (Index a = 0; a < m.size(); ++a) {
        json row = json::array();
        for (Index b = 0; b < m.size(); ++b) row.push_back(m.labels[m.mul(a, b)]);
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

json to_json(const OrderedMagma& carrier, const SelfMap& s) {
    s.check_carrier(carrier.poset());
    auto j = header("map");
    j["name"] = s.name();
    j["carrier"] = to_json(carrier);
    json t = json::array();
    for (Index x = 0; x < s.size(); ++x) t.push_back(carrier.label(s(x)));
    j["table"] = t;
    return j;
}

json to_json(const MagmaMap& f) {
    auto j = header("morphism");
    j["source"] = to_json(f.source);
    j["target"] = to_json(f.target);
    json t = json::array();
    for (auto y : f.table) t.push_back(f.target.label(y));
    j["table"] = t;
    return j;
}

json lazy_json(const std::string& carrier) {
    auto j = header("lazy");
    j["carrier"] = carrier;
    return j;
}

StructureDoc parse_doc(const json& j) {
    check_header(j);
    StructureDoc d;
    d.kind = str(field(j, "kind"), "kind");
    if (d.kind == "poset") {
        d.poset = poset_of(j);
    } else if (d.kind == "magma") {
        d.magma = magma_of(j);
        d.poset = d.magma->poset();
    } else if (d.kind == "finite-magma") {
        auto labels = labels_of(j);
        auto table = table_of(j, labels);
        std::string name = j.contains("name") ? str(j.at("name"), "name") : "M";
        d.finite = FiniteMagmaDesc::make(std::move(name), std::move(labels), std::move(table));
    } else if (d.kind == "map") {
        d.magma = nested_magma(j, "carrier");
        d.poset = d.magma->poset();
        std::string name = j.contains("name") ? str(j.at("name"), "name") : "";
        d.map = MonotoneMap(d.magma->poset(), map_table(j, d.magma->poset()), std::move(name));
    } else if (d.kind == "morphism") {
        auto src = nested_magma(j, "source");
        auto dst = nested_magma(j, "target");
        const auto& t = field(j, "table");
        if (!t.is_array() || t.size() != src.size()) bad("morphism table must have one entry per source element");
        std::vector<Index> table;
        for (const auto& x : t) table.push_back(lookup(dst.poset().labels(), x));
        d.morphism = MagmaMap{std::move(src), std::move(dst), std::move(table)};
    } else if (d.kind == "lazy") {
        d.lazy_carrier = str(field(j, "carrier"), "carrier");
        if (d.lazy_carrier != "upsets-nat" && d.lazy_carrier != "chain-omega") bad("unknown lazy carrier");
    } else {
        bad("unknown document kind " + d.kind);
    }
    return d;
}

StructureDoc read_doc(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    return parse_doc(j);
}

StructureDoc load_doc(const std::string& path) {
    if (path == "-") return read_doc(std::cin);
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    return read_doc(in);
}

std::string hasse_dot(const FinitePoset& p, const std::string& name) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << quote(name) << " {\n  rankdir=BT;\n";
    for (Index i = 0; i < p.size(); ++i) os << "  " << quote(p.label(i)) << ";\n";
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b) {
            if (!p.lt(a, b)) continue;
            bool cover = true;
            for (Index c = 0; c < p.size() && cover; ++c) cover = !(p.lt(a, c) && p.lt(c, b));
            if (cover) os << "  " << quote(p.label(a)) << " -> " << quote(p.label(b)) << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace prequant

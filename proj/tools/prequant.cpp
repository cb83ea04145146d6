// prequant: batch interface over the library. Every `make` emits a structure
// document; every analysis command reads one (a path, or - for stdin).

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "prequant/divisorial.hpp"
#include "prequant/doc.hpp"
#include "prequant/finitary.hpp"
#include "prequant/idl.hpp"
#include "prequant/instances.hpp"
#include "prequant/lazy.hpp"

using namespace prequant;
using ojson = nlohmann::ordered_json;

namespace {

bool g_json = false;

// ---- output -----------------------------------------------------------------

void render(const ojson& j, std::ostream& os, int depth) {
    const std::string pad(depth * 2, ' ');
    auto scalar = [](const ojson& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return std::string("-");
        return v.dump();
    };
    auto flat = [](const ojson& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if (x.is_structured()) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (!v.is_structured()) {
                os << pad << k << ": " << scalar(v) << "\n";
            } else if (flat(v)) {
                os << pad << k << ":";
                for (const auto& x : v) os << " " << scalar(x);
                os << "\n";
            } else {
                os << pad << k << ":\n";
                render(v, os, depth + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured()) {
                os << pad << "-\n";
                render(v, os, depth + 1);
            } else {
                os << pad << "- " << scalar(v) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

void emit(const ojson& j) {
    if (g_json)
        std::cout << j.dump(2) << "\n";
    else
        render(j, std::cout, 0);
}

void emit_doc(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string map_text(const OrderedMagma& q, const SelfMap& s) {
    std::string out;
    for (Index x = 0; x < q.size(); ++x) {
        if (x) out += " ";
        out += q.label(x) + "->" + q.label(s(x));
    }
    return out;
}

ojson map_json(const OrderedMagma& q, const SelfMap& s) {
    return ojson{{"name", s.name()}, {"map", map_text(q, s)}};
}

std::vector<std::string> labels(const OrderedMagma& q, const std::vector<Index>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(q.label(x));
    return out;
}

// ---- inputs -----------------------------------------------------------------

OrderedMagma load_magma(const std::string& path) {
    auto d = load_doc(path);
    if (!d.magma) fail(ErrorKind::malformed, "expected a magma document, got " + d.kind);
    return *d.magma;
}

MonotoneMap resolve_nucleus(const OrderedMagma& q, const std::string& arg) {
    const auto& p = q.poset();
    if (arg == "d") return MonotoneMap::identity(p);
    if (arg == "e") return MonotoneMap::top(p);
    if (!arg.empty() && arg[0] == '#') {
        const auto all = enumerate_nuclei(q);
        std::size_t k = 0;
        try {
            k = std::stoul(arg.substr(1));
        } catch (const std::exception&) {
            fail(ErrorKind::malformed, "bad nucleus index " + arg);
        }
        if (k >= all.size()) fail(ErrorKind::malformed, "nucleus index out of range: " + arg);
        auto s = all[k];
        if (s.name().empty()) s.set_name(arg);
        return s;
    }
    std::vector<std::string> parts;
    std::stringstream ss(arg);
    for (std::string s; std::getline(ss, s, ',');) parts.push_back(s);
    if (parts.size() == q.size()) {
        std::vector<Index> t;
        for (const auto& s : parts) t.push_back(q.index_of(q.at(s)));
        return MonotoneMap(p, std::move(t), "user");
    }
    auto d = load_doc(arg);
    if (!d.map) fail(ErrorKind::malformed, "expected a map document in " + arg);
    if (d.magma->poset().labels() != p.labels() || d.magma->table() != q.table())
        fail(ErrorKind::foreign_element, "map document is built on a different carrier");
    return MonotoneMap(p, d.map->table(), d.map->name());
}

FiniteMagmaDesc named_group(const std::string& g) {
    if (g == "trivial" || g == "Z1") return FiniteMagmaDesc::cyclic_group(1);
    if (g == "K4" || g == "Z2xZ2") return FiniteMagmaDesc::klein_group();
    if (g.size() >= 2 && g[0] == 'Z') {
        try {
            return FiniteMagmaDesc::cyclic_group(std::stoul(g.substr(1)));
        } catch (const std::invalid_argument&) {
        }
    }
    fail(ErrorKind::malformed, "unknown group " + g);
}

FiniteMagmaDesc named_monoid(const std::string& m) {
    if (m == "idempotent") return FiniteMagmaDesc::idempotent_monoid();
    if (m.rfind("LZ", 0) == 0) return FiniteMagmaDesc::left_zero(std::stoul(m.substr(2)));
    return named_group(m);
}

// ---- commands ---------------------------------------------------------------

ojson profile_json(const OrderedMagma& q) {
    const auto prof = classify(q);
    ojson rows = ojson::object();
    for (const auto& [k, v] : prof.rows()) rows[k] = v;
    const auto ds = distinguished_sets(q);
    ojson out{{"name", q.name()}, {"size", q.size()}, {"profile", rows}, {"position", diagram_position(prof)}};
    out["units"] = labels(q, ds.units);
    out["invertibles"] = labels(q, ds.invertibles);
    out["idempotents"] = labels(q, ds.idempotents);
    out["compacts"] = labels(q, ds.compacts);
    if (ds.above_unit_idempotents) out["above-unit-idempotents"] = labels(q, *ds.above_unit_idempotents);
    return out;
}

ojson cmd_nuclei(const OrderedMagma& q) {
    const auto all = enumerate_nuclei(q);
    ojson list = ojson::array();
    for (std::size_t k = 0; k < all.size(); ++k) {
        auto s = all[k];
        if (s.name().empty()) s.set_name("#" + std::to_string(k));
        list.push_back(map_json(q, s));
    }
    return ojson{{"carrier", q.name()}, {"count", all.size()}, {"nuclei", list}};
}

ojson cmd_star_f_finite(const OrderedMagma& q, const MonotoneMap& s) {
    const auto f = star_f(q, s);
    const auto fin = is_finitary(q.poset(), s);
    const auto k = verify_klattice(q, s);
    return ojson{{"nucleus", map_json(q, s)},
                 {"star_f", map_json(q, f)},
                 {"finitary", to_string(fin.verdict)},
                 {"note", fin.note},
                 {"quotient-precoherent", k.precoherent},
                 {"class-preserved", k.same_class},
                 {"compact-identity", k.k_identity}};
}

ojson cmd_star_f_lazy(const std::string& carrier, const std::string& nucleus, std::size_t samples, std::uint64_t seed) {
    if (carrier == "chain-omega") {
        const auto s = ChainClosure::parse(nucleus);
        const auto xs = chain_samples(samples, seed);
        const auto f = star_f(s, xs);
        const auto fin = is_finitary(s);
        return ojson{{"carrier", carrier}, {"nucleus", s.name()},       {"star_f", f.name()},
                     {"samples", xs.size()}, {"finitary", to_string(fin.verdict)}, {"note", fin.note}};
    }
    if (carrier == "upsets-nat") {
        const auto s = UpsetNucleus::parse(nucleus);
        const auto xs = upset_samples(samples, seed);
        const auto fin = is_finitary(s, xs);
        ojson out{{"carrier", carrier}, {"nucleus", s.name()}, {"finitary", to_string(fin.verdict)}, {"note", fin.note}};
        if (fin.witness) out["witness"] = *fin.witness;
        const auto f = star_f(s, xs);
        out["star_f"] = f.name();
        out["samples"] = xs.size();
        if (f.kind() == UpsetNucleus::Kind::translate || f.kind() == UpsetNucleus::Kind::top) {
            const auto k = verify_klattice(s, xs);
            out["compact-identity"] = k.k_identity;
            out["sampled"] = k.sampled;
        }
        return out;
    }
    fail(ErrorKind::malformed, "unknown lazy carrier " + carrier);
}

ojson cmd_stable(const OrderedMagma& q, const MonotoneMap& s) {
    const auto c = stable_conditions(q, s);
    ensure(c.agree(), "stable conditions disagree");
    const auto bar = stable_closure(q, s);
    return ojson{{"nucleus", map_json(q, s)},
                 {"stable", c.definition},
                 {"conditions",
                  {{"definition", c.definition},
                   {"meet-one-and-residuals", c.meet_one_and_residuals},
                   {"residual-meet-one", c.residual_meet_one},
                   {"equals-bar", c.equals_bar}}},
                 {"gv", labels(q, gv_elements(q, s).elements)},
                 {"bar", map_json(q, bar)}};
}

ojson cmd_v(const OrderedMagma& q, const std::string& element, VStrategy st) {
    const auto a = q.at(element);
    ojson out{{"element", element}, {"strategy", to_string(st)}, {"v", map_json(q, v(q, a, st))}};
    if (st == VStrategy::all) {
        const auto all = v_strategies(q, a);
        ojson used = ojson::array();
        if (all.lin) used.push_back("lin");
        if (all.rs) used.push_back("rs");
        if (all.residual) used.push_back("residual");
        if (all.units) used.push_back("units");
        out["applicable"] = used;
    }
    return out;
}

ojson cmd_simple(const OrderedMagma& q) {
    const auto r = simplicity(q);
    ojson out{{"carrier", q.name()}, {"simple", r.simple()}, {"only-d-and-e", r.by_enumeration},
              {"v-is-d-below-top", r.by_divisorial}};
    out["double-residual"] = r.by_residuals ? ojson(*r.by_residuals) : ojson("n/a");
    return out;
}

ojson bijection(const MagmaMap& f) {
    ojson out = ojson::array();
    for (Index x = 0; x < f.source.size(); ++x) out.push_back(f.source.label(x) + " -> " + f.target.label(f(x)));
    return out;
}

ojson cmd_idl(const OrderedMagma& m) {
    const auto c = idl(m);
    ojson ideals = ojson::array();
    for (Index i = 0; i < c.ideals.size(); ++i) {
        std::vector<std::string> xs;
        for (auto x : members(c.ideals[i])) xs.push_back(m.label(x));
        ideals.push_back(ojson{{"label", c.magma.label(i)}, {"members", xs}});
    }
    ojson table = ojson::array();
    for (Index i = 0; i < c.ideals.size(); ++i) {
        std::string row;
        for (Index j = 0; j < c.ideals.size(); ++j) row += (j ? " " : "") + c.magma.label(c.magma.mul(i, j));
        table.push_back(row);
    }
    const auto prof = classify(c.magma);
    return ojson{{"source", m.name()},
                 {"ideals", ideals},
                 {"product", table},
                 {"precoherent", prof.precoherent},
                 {"near-prequantale", prof.near_prequantale},
                 {"prequantale", prof.prequantale}};
}

ojson cmd_roundtrip(const OrderedMagma& m) {
    ojson out{{"carrier", m.name()}};
    try {
        const auto r = roundtrip_semilattice(m);
        out["down"] = ojson{{"isomorphism", r.isomorphism}, {"bijection", bijection(r.witness)}};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::wrong_class) throw;
        out["down"] = std::string("n/a: ") + e.what();
    }
    try {
        const auto r = roundtrip_prequantale(m);
        out["sup"] = ojson{{"isomorphism", r.isomorphism}, {"bijection", bijection(r.witness)}};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::not_precoherent && e.kind() != ErrorKind::wrong_class) throw;
        out["sup"] = std::string("n/a: ") + e.what();
    }
    return out;
}

ojson cmd_tower(const OrderedMagma& m, std::size_t depth) {
    const auto t = nucleus_tower(m, depth);
    ojson levels = ojson::array();
    for (std::size_t k = 0; k < t.levels.size(); ++k)
        levels.push_back(ojson{{"level", k + 1}, {"size", t.levels[k].magma.size()}});
    ojson iso = ojson::array();
    for (bool b : t.d_is_isomorphism) iso.push_back(b);
    return ojson{{"carrier", m.name()}, {"levels", levels}, {"d-isomorphism", iso}, {"stabilizes", t.stabilizes()}};
}

// ---- verify-all -------------------------------------------------------------

struct Row {
    std::string key;
    std::string status;  // pass, fail, n/a
    std::string detail;
};

Row run_row(const std::string& key, const std::function<bool()>& body) {
    try {
        return {key, body() ? "pass" : "fail", ""};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::internal) return {key, "fail", e.what()};
        return {key, "n/a", e.what()};
    }
}

std::vector<Row> verify_all(const OrderedMagma& q) {
    std::vector<Row> rows;
    const auto prof = classify(q);
    const auto& p = q.poset();
    rows.push_back(run_row("classification", [&] { return classify(q) == prof; }));
    rows.push_back(run_row("nucleus-characterizations", [&] {
        for (const auto& c : enumerate_closures(p)) is_nucleus(q, c);
        return true;
    }));
    rows.push_back(run_row("nucleus-lattice", [&] {
        const auto ns = enumerate_nuclei(q);
        for (const auto& a : ns)
            for (const auto& b : ns) {
                const std::vector<SelfMap> pair{a, b};
                const auto j = nuclei_join(q, pair);
                const auto ia = fixed_set(p, a), ib = fixed_set(p, b);
                if (fixed_set(p, j) != (ia & ib)) return false;
                const auto m = nuclei_meet(q, pair);
                if (!pointwise_leq(p, m, a) || !pointwise_leq(p, m, b)) return false;
            }
        return true;
    }));
    rows.push_back(run_row("divisorial-decomposition", [&] {
        for (const auto& s : enumerate_nuclei(q)) divisorial_decomposition(q, s);
        return true;
    }));
    rows.push_back(run_row("divisorial-strategies", [&] {
        if (!prof.near_prequantale) fail(ErrorKind::hypothesis_not_met, "not a near prequantale");
        for (Index a = 0; a < q.size(); ++a)
            if (!v_strategies(q, q.element(a)).agree()) return false;
        return true;
    }));
    rows.push_back(run_row("simplicity-routes", [&] {
        simplicity(q);
        return true;
    }));
    rows.push_back(run_row("stable-equivalences", [&] {
        for (const auto& s : enumerate_nuclei(q))
            if (!stable_conditions(q, s).agree()) return false;
        return true;
    }));
    rows.push_back(run_row("finitary-companion", [&] {
        for (const auto& s : enumerate_nuclei(q)) {
            const auto k = verify_klattice(q, s);
            if (!(k.precoherent && k.same_class && k.k_identity)) return false;
        }
        return true;
    }));
    rows.push_back(run_row("semilattice-roundtrip", [&] { return roundtrip_semilattice(q).isomorphism; }));
    rows.push_back(run_row("prequantale-roundtrip", [&] { return roundtrip_prequantale(q).isomorphism; }));
    rows.push_back(run_row("nucleus-tower", [&] {
        const auto t = nucleus_tower(q, 2);
        return !prof.near_prequantale || t.stabilizes() == is_simple(q);
    }));
    return rows;
}

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::malformed:
        case ErrorKind::foreign_element: return 2;
        case ErrorKind::internal: return 3;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prequant: ordered magmas, nuclei and their companions"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "Machine-readable output");
    std::function<void()> action;

    // make
    auto* make = app.add_subcommand("make", "Construct a structure document");
    make->require_subcommand(1);
    std::uint32_t zmod = 0;
    std::vector<std::string> poly;
    auto* ring = make->add_subcommand("ring", "Ideal lattice of a finite commutative ring");
    auto* zopt = ring->add_option("--zmod", zmod, "Z/n");
    auto* popt = ring->add_option("--poly", poly, "p=<prime> f=<modulus>, e.g. p=2 f=x^3")->expected(2);
    zopt->excludes(popt);
    ring->callback([&] {
        action = [&] {
            RingDesc d;
            if (zmod) {
                d = RingDesc::zmod(zmod);
            } else if (!poly.empty()) {
                std::uint32_t p = 0;
                std::string f;
                for (const auto& kv : poly) {
                    if (kv.rfind("p=", 0) == 0) p = std::stoul(kv.substr(2));
                    else if (kv.rfind("f=", 0) == 0) f = kv.substr(2);
                    else fail(ErrorKind::malformed, "expected p=<prime> f=<poly>, got " + kv);
                }
                d = RingDesc::poly(p, f);
            } else {
                fail(ErrorKind::malformed, "ring needs --zmod or --poly");
            }
            emit_doc(to_json(ring_ideal_lattice(d).lattice));
        };
    });
    std::string group = "Z2";
    auto* msl = make->add_subcommand("module-system-lattice", "2^{G_0} for a finite abelian group");
    msl->add_option("--group", group, "trivial, Z2, Z3, Z4, K4")->capture_default_str();
    msl->callback([&] { action = [&] { emit_doc(to_json(module_system_lattice(named_group(group)).lattice)); }; });
    std::string monoid = "trivial";
    auto* isl = make->add_subcommand("ideal-system-lattice", "2^{M_0} for a finite commutative monoid");
    isl->add_option("--monoid", monoid, "trivial, Z2, Z3, idempotent")->capture_default_str();
    isl->callback([&] { action = [&] { emit_doc(to_json(ideal_system_lattice(named_monoid(monoid)).lattice)); }; });
    std::string magma_file, ps_group;
    bool drop_empty = false;
    auto* ps = make->add_subcommand("powerset", "Power set of a finite magma under complex multiplication");
    auto* mopt = ps->add_option("--magma", magma_file, "finite-magma document");
    auto* gopt = ps->add_option("--group", ps_group, "Zn, K4, LZn or idempotent");
    mopt->excludes(gopt);
    ps->add_flag("--drop-empty", drop_empty, "Remove the empty subset");
    ps->callback([&] {
        action = [&] {
            FiniteMagmaDesc m;
            if (!magma_file.empty()) {
                auto d = load_doc(magma_file);
                if (!d.finite) fail(ErrorKind::malformed, "expected a finite-magma document");
                m = *d.finite;
            } else if (!ps_group.empty()) {
                m = named_monoid(ps_group);
            } else {
                fail(ErrorKind::malformed, "powerset needs --magma or --group");
            }
            emit_doc(to_json(powerset_prequantale(m, drop_empty)));
        };
    });
    auto* ups = make->add_subcommand("upsets", "Subsets of N under Minkowski sum (lazy)");
    ups->callback([&] { action = [&] { emit_doc(lazy_json("upsets-nat")); }; });
    std::string chain_kind = "omega";
    int chain_n = 1;
    auto* ch = make->add_subcommand("chain", "Chain instances");
    ch->add_option("kind", chain_kind, "omega (lazy N u {inf}), z-inf, z-pm-inf, sat, sat-pm")->capture_default_str();
    ch->add_option("--n", chain_n, "size parameter")->capture_default_str();
    ch->callback([&] {
        action = [&] {
            if (chain_kind == "omega") return emit_doc(lazy_json("chain-omega"));
            if (chain_kind == "z-inf") return emit_doc(to_json(discrete_group_infinity(chain_n)));
            if (chain_kind == "z-pm-inf") return emit_doc(to_json(plus_minus_infinity(discrete_group_infinity(chain_n))));
            if (chain_kind == "sat") return emit_doc(to_json(saturating_chain(chain_n)));
            if (chain_kind == "sat-pm") return emit_doc(to_json(plus_minus_infinity(saturating_chain(chain_n))));
            fail(ErrorKind::malformed, "unknown chain kind " + chain_kind);
        };
    });
    std::string lat = "diamond", op = "join";
    auto* la = make->add_subcommand("lattice", "Finite lattice under join or meet");
    la->add_option("shape", lat, "diamond, pentagon, m3, chain:<n>, two")->capture_default_str();
    la->add_option("--op", op, "join or meet")->capture_default_str();
    la->callback([&] {
        action = [&] {
            if (lat == "two") return emit_doc(to_json(two_element_lattice()));
            FinitePoset p;
            if (lat == "diamond") p = diamond();
            else if (lat == "pentagon") p = pentagon();
            else if (lat == "m3") p = m3();
            else if (lat.rfind("chain:", 0) == 0) p = FinitePoset::chain(std::stoul(lat.substr(6)));
            else fail(ErrorKind::malformed, "unknown lattice " + lat);
            if (op != "join" && op != "meet") fail(ErrorKind::malformed, "op must be join or meet");
            emit_doc(to_json(lattice_magma(p, op == "join" ? LatticeOp::join : LatticeOp::meet, lat + "-" + op)));
        };
    });
    std::string corpus_key;
    auto* co = make->add_subcommand("corpus", "A shipped corpus structure by key (--list to show keys)");
    bool list_corpus = false;
    co->add_option("key", corpus_key, "corpus key");
    co->add_flag("--list", list_corpus, "List keys");
    co->callback([&] {
        action = [&] {
            for (const auto& e : corpus()) {
                if (list_corpus) std::cout << e.key << "\n";
                else if (e.key == corpus_key) return emit_doc(to_json(e.magma));
            }
            if (!list_corpus) fail(ErrorKind::malformed, "unknown corpus key " + corpus_key);
        };
    });

    // analysis
    std::string file, nucleus_arg, element;
    auto with_magma = [&](CLI::App* sub, std::function<ojson(const OrderedMagma&)> f) {
        sub->add_option("file", file, "structure document, or - for stdin")->required();
        sub->callback([&, f] { action = [&, f] { emit(f(load_magma(file))); }; });
    };
    with_magma(app.add_subcommand("classify", "Profile and distinguished subsets"), profile_json);
    with_magma(app.add_subcommand("nuclei", "Enumerate all nuclei"), cmd_nuclei);

    bool dot = false;
    auto* nl = app.add_subcommand("nucleus-lattice", "The lattice N(M)");
    nl->add_option("file", file)->required();
    nl->add_flag("--dot", dot, "Graphviz Hasse diagram");
    nl->callback([&] {
        action = [&] {
            const auto q = load_magma(file);
            const auto l = nucleus_lattice(q);
            if (dot) {
                std::cout << hasse_dot(l.magma.poset(), "N(" + q.name() + ")");
                return;
            }
            ojson list = ojson::array();
            for (Index i = 0; i < l.nuclei.size(); ++i)
                list.push_back(ojson{{"label", l.magma.label(i)}, {"map", map_text(q, l.nuclei[i])}});
            emit(ojson{{"carrier", q.name()}, {"nuclei", list}, {"lattice", nlohmann::ordered_json::parse(to_json(l.magma).dump())}});
        };
    });

    std::string lazy_carrier;
    std::size_t samples = 100;
    std::uint64_t seed = 7;
    auto* sf = app.add_subcommand("star-f", "Finitary companion of a nucleus");
    sf->add_option("file", file, "structure document (omit with --carrier)");
    sf->add_option("nucleus", nucleus_arg, "d, e, #k, a label table a,b,..., or a map document");
    sf->add_option("--carrier", lazy_carrier, "chain-omega or upsets-nat");
    sf->add_option("--samples", samples)->capture_default_str();
    sf->add_option("--seed", seed)->capture_default_str();
    sf->callback([&] {
        action = [&] {
            if (!lazy_carrier.empty()) {
                // with --carrier the first positional is the nucleus
                const auto& n = nucleus_arg.empty() ? file : nucleus_arg;
                return emit(cmd_star_f_lazy(lazy_carrier, n.empty() ? "d" : n, samples, seed));
            }
            auto d = load_doc(file);
            if (d.kind == "lazy") return emit(cmd_star_f_lazy(d.lazy_carrier, nucleus_arg.empty() ? "d" : nucleus_arg, samples, seed));
            if (!d.magma) fail(ErrorKind::malformed, "expected a magma document");
            emit(cmd_star_f_finite(*d.magma, resolve_nucleus(*d.magma, nucleus_arg.empty() ? "d" : nucleus_arg)));
        };
    });

    auto* st = app.add_subcommand("stable", "Stability, GV elements and the stable companion");
    st->add_option("file", file)->required();
    st->add_option("nucleus", nucleus_arg)->required();
    st->callback([&] {
        action = [&] {
            const auto q = load_magma(file);
            emit(cmd_stable(q, resolve_nucleus(q, nucleus_arg)));
        };
    });

    std::string strategy = "all";
    auto* vc = app.add_subcommand("v", "Divisorial nucleus v(a)");
    vc->add_option("file", file)->required();
    vc->add_option("element", element)->required();
    vc->add_option("--strategy", strategy, "lin, rs, residual, units or all")->capture_default_str();
    vc->callback([&] { action = [&] { emit(cmd_v(load_magma(file), element, parse_strategy(strategy))); }; });

    with_magma(app.add_subcommand("simple", "Simplicity by three routes"), cmd_simple);
    with_magma(app.add_subcommand("idl", "Ideal completion with down-set multiplication"), cmd_idl);
    with_magma(app.add_subcommand("roundtrip", "Both representation round trips"), cmd_roundtrip);

    std::size_t depth = 2;
    auto* tw = app.add_subcommand("tower", "The tower N(M), N(N(M)), ...");
    tw->add_option("file", file)->required();
    tw->add_option("--depth", depth)->capture_default_str();
    tw->callback([&] { action = [&] { emit(cmd_tower(load_magma(file), depth)); }; });

    int verify_status = 0;
    auto* va = app.add_subcommand("verify-all", "Run every applicable invariant suite");
    va->add_option("file", file)->required();
    va->callback([&] {
        action = [&] {
            const auto q = load_magma(file);
            ojson rows = ojson::object();
            for (const auto& r : verify_all(q)) {
                rows[r.key] = r.detail.empty() ? r.status : r.status + " (" + r.detail + ")";
                if (r.status == "fail") verify_status = 1;
            }
            emit(ojson{{"carrier", q.name()}, {"matrix", rows}});
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        if (action) action();
    } catch (const Error& e) {
        std::cerr << "prequant: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "prequant: malformed input: " << e.what() << "\n";
        return 2;
    }
    return verify_status;
}

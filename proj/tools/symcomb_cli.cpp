// Command-line surface over the library: reproducible experiments with
// machine-readable reports.  Exit codes: 0 ok, 2 parse, 3 out-of-range,
// 4 resource cap.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "symcomb/covers.hpp"
#include "symcomb/groebner.hpp"
#include "symcomb/homalg.hpp"
#include "symcomb/io.hpp"
#include "symcomb/minors.hpp"
#include "symcomb/monomial.hpp"
#include "symcomb/polar.hpp"
#include "symcomb/simplicial.hpp"

using symcomb::io::json;
namespace sc = symcomb;

namespace {

int polar_var_cap() {
    if (const char* env = std::getenv("SYMCOMB_VAR_CAP")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return sc::default_polar_var_cap;
}

struct report {
    json j;
    bool table = false;
    report(const std::string& command, long seed) {
        j["command"] = command;
        j["inputs"] = json::object();
        j["results"] = json::object();
        j["provenance"] = json::array();
        j["seed"] = seed;
    }
    void cite(const std::string& what) { j["provenance"].push_back(what); }
    void print() const {
        if (!table) {
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "command: " << j["command"].get<std::string>() << "\n";
        for (const auto& [k, v] : j["results"].items())
            std::cout << "  " << k << ": " << v.dump() << "\n";
    }
};

json witness_json(const sc::facet_witness& w) {
    json out;
    out["facet_f"] = sc::vertices_of(w.facet_f);
    out["facet_g"] = sc::vertices_of(w.facet_g);
    out["element_i"] = w.element_i;
    return out;
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    for (int v : parse_vertex_list(s)) out.push_back(v);
    return out;
}

int run_complex(const std::string& file, bool matroid, bool do_dual, bool connectivity,
                bool strong, bool exchange, bool table, long seed) {
    sc::simplicial_complex cx = sc::io::complex_from_json(sc::io::load_json_file(file));
    report rep("complex", seed);
    rep.table = table;
    rep.j["inputs"]["file"] = file;
    rep.j["inputs"]["complex"] = sc::io::complex_to_json(cx);
    rep.j["results"]["dimension"] = cx.dimension();
    rep.j["results"]["pure"] = cx.is_pure();
    if (matroid) {
        auto mc = sc::is_matroid(cx);
        rep.j["results"]["is_matroid"] = mc.holds;
        if (mc.witness) rep.j["results"]["witness"] = witness_json(*mc.witness);
        rep.cite("basis-exchange-axiom");
    }
    if (exchange) {
        auto ec = sc::symmetric_exchange_holds(cx);
        rep.j["results"]["symmetric_exchange"] = ec.holds;
        if (ec.witness) rep.j["results"]["exchange_witness"] = witness_json(*ec.witness);
        rep.cite("symmetric-exchange-property");
    }
    if (do_dual) {
        rep.j["results"]["dual"] = sc::io::complex_to_json(sc::dual(cx));
        rep.j["results"]["self_dual"] = sc::dual(cx) == cx;
        rep.cite("facet-complement-duality");
    }
    if (strong) {
        rep.j["results"]["strongly_connected"] = sc::is_strongly_connected(cx);
        rep.cite("facet-swap-connectedness");
    }
    if (connectivity) {
        std::vector<sc::vertex_set> primes;
        sc::vertex_set full =
            (cx.n() == 64) ? ~sc::vertex_set{0} : ((sc::vertex_set{1} << cx.n()) - 1);
        for (sc::vertex_set f : cx.facets()) primes.push_back(full & ~f);
        rep.j["results"]["connectivity"] = sc::connectivity_degree_masks(primes, cx.n());
        rep.cite("connectedness-in-codimension");
    }
    rep.print();
    return 0;
}

int run_ideal(CLI::App* cmd, bool table, long seed) {
    auto get = [&](const std::string& name) { return cmd->get_option(name); };
    report rep("ideal", seed);
    rep.table = table;
    int cap = polar_var_cap();

    sc::monomial_ideal ideal;
    long symbolic_k = get("--symbolic")->count() ? get("--symbolic")->as<long>() : 0;
    long power_k = get("--power")->count() ? get("--power")->as<long>() : 0;

    if (get("--cover")->count()) {
        std::string file = get("--cover")->as<std::string>();
        sc::simplicial_complex cx = sc::io::complex_from_json(sc::io::load_json_file(file));
        std::vector<long> w(cx.facets().size(), 1);
        if (get("--weights")->count()) {
            w = parse_long_list(get("--weights")->as<std::string>());
            if (w.size() != cx.facets().size()) throw sc::parse_error("one weight per facet");
        }
        rep.j["inputs"]["cover_of"] = sc::io::complex_to_json(cx);
        rep.j["inputs"]["weights"] = w;
        long k = symbolic_k ? symbolic_k : 1;
        ideal = sc::symbolic_power(cx, w, k);
        rep.j["inputs"]["symbolic_k"] = k;
        rep.cite("weighted-cover-ideal-symbolic-power");
    } else if (get("--sr")->count()) {
        std::string file = get("--sr")->as<std::string>();
        sc::simplicial_complex cx = sc::io::complex_from_json(sc::io::load_json_file(file));
        rep.j["inputs"]["stanley_reisner_of"] = sc::io::complex_to_json(cx);
        ideal = sc::stanley_reisner(cx);
        rep.cite("stanley-reisner-correspondence");
    } else if (get("--file")->count()) {
        std::string file = get("--file")->as<std::string>();
        ideal = sc::io::ideal_from_json(sc::io::load_json_file(file));
        rep.j["inputs"]["file"] = file;
    } else if (get("--prime")->count()) {
        std::vector<int> f = parse_vertex_list(get("--prime")->as<std::string>());
        int n = get("--n")->count() ? get("--n")->as<int>()
                                    : *std::max_element(f.begin(), f.end());
        long k = power_k ? power_k : 1;
        rep.j["inputs"]["prime"] = f;
        rep.j["inputs"]["power"] = k;
        if (cmd->get_option("--ass-polar")->as<bool>()) {
            auto primes = sc::ass_primes_prime_power(f, k);
            json arr = json::array();
            for (const auto& p : primes) {
                json pe = json::array();
                for (auto [v, l] : p.vars) pe.push_back(json::array({v, l}));
                arr.push_back(pe);
            }
            rep.j["results"]["ass_primes"] = arr;
            rep.j["results"]["count"] = primes.size();
            rep.cite("associated-primes-of-polarized-prime-powers");
            rep.print();
            return 0;
        }
        ideal = sc::prime_power(f, k, n);
    } else {
        throw sc::parse_error("one of --cover/--sr/--file/--prime is required");
    }

    if (power_k && !get("--prime")->count()) ideal = sc::power(ideal, power_k);
    rep.j["results"]["generators"] = sc::io::ideal_to_json(ideal);
    auto hd = sc::height_and_dim(ideal);
    rep.j["results"]["height"] = hd.height;
    rep.j["results"]["dim"] = hd.dim;

    bool want_depth = cmd->get_option("--depth")->as<bool>();
    bool want_cm = cmd->get_option("--cm")->as<bool>();
    bool want_reg = cmd->get_option("--reg")->as<bool>();
    if (want_depth || want_cm || want_reg) {
        auto inv = sc::invariants_of_monomial(ideal, sc::coeff_field::rationals(), cap);
        if (want_depth) rep.j["results"]["depth"] = inv.depth;
        if (want_cm) rep.j["results"]["is_CM"] = inv.is_cm;
        if (want_reg) rep.j["results"]["reg"] = inv.reg;
        rep.j["results"]["pd"] = inv.pd;
        rep.j["results"]["polarized_vars"] = inv.polarized_vars;
        rep.cite("betti-numbers-via-polarization");
    }
    if (cmd->get_option("--ass-polar")->as<bool>() && get("--cover")->count()) {
        std::string file = get("--cover")->as<std::string>();
        sc::simplicial_complex cx = sc::io::complex_from_json(sc::io::load_json_file(file));
        std::vector<long> w(cx.facets().size(), 1);
        if (get("--weights")->count()) w = parse_long_list(get("--weights")->as<std::string>());
        auto primes = sc::ass_primes_weighted(cx, w, symbolic_k ? symbolic_k : 1);
        rep.j["results"]["ass_primes_count"] = primes.size();
        rep.cite("associated-primes-of-polarized-prime-powers");
    }
    if (cmd->get_option("--polarize")->as<bool>()) {
        rep.j["results"]["polarization"] = sc::io::ideal_to_json(sc::polarize(ideal).ideal);
        rep.cite("betti-numbers-via-polarization");
    }
    rep.print();
    return 0;
}

int run_covers(const std::string& file, long hf_upto, long dim_kmax, bool good_weight,
               bool mult_fit, bool table, long seed) {
    sc::weighted_complex wc = sc::io::weighted_from_json(sc::io::load_json_file(file));
    report rep("covers", seed);
    rep.table = table;
    rep.j["inputs"]["weighted_complex"] = sc::io::weighted_to_json(wc);
    if (hf_upto > 0) {
        json arr = json::array();
        std::vector<long> vals;
        for (long k = 1; k <= hf_upto; ++k) {
            long v = sc::hf_abar(wc, k);
            vals.push_back(v);
            arr.push_back(v);
        }
        rep.j["results"]["hf"] = arr;
        rep.cite("basic-cover-hilbert-function");
        if (mult_fit) {
            auto fit = sc::fit_multiplicity(vals);
            rep.j["results"]["multiplicity_fit"] = fit.multiplicity;
            rep.j["results"]["fit_degree"] = fit.degree;
            rep.j["results"]["fit_confirmed"] = fit.confirmed;
            rep.cite("cover-algebra-multiplicity");
        }
    }
    if (dim_kmax > 0) {
        rep.j["results"]["dim_abar"] = sc::estimate_dim_abar(wc, dim_kmax);
        rep.cite("cover-algebra-dimension-criterion");
    }
    if (good_weight) {
        auto gw = sc::solve_good_weight(wc);
        rep.j["results"]["good_weighted"] = gw.weight.has_value();
        if (gw.weight) {
            json lam = json::array();
            for (const auto& q : gw.weight->lambda) lam.push_back(q.get_str());
            rep.j["results"]["lambda"] = lam;
        } else {
            rep.j["results"]["certificate_vertices"] = gw.certificate_vertices;
        }
        rep.cite("good-weight-feasibility");
    }
    rep.print();
    return 0;
}

int run_minors(CLI::App* cmd, bool table, long seed) {
    report rep("minors", seed);
    rep.table = table;
    int t = cmd->get_option("-t")->as<int>();
    int m = cmd->get_option("-m")->as<int>();
    int n = cmd->get_option("-n")->as<int>();
    rep.j["inputs"]["t"] = t;
    rep.j["inputs"]["m"] = m;
    rep.j["inputs"]["n"] = n;
    sc::minors_params p{m, n, t};
    if (cmd->get_option("--reg")->as<bool>()) {
        auto r = sc::regularity_and_a_invariant(p);
        rep.j["results"]["case"] = r.case_id;
        if (r.case_id == 2) rep.j["results"]["k0"] = r.k0;
        rep.j["results"]["a"] = r.a_invariant;
        rep.j["results"]["reg"] = r.reg;
        rep.cite("regularity-of-minor-algebras");
    }
    if (cmd->get_option("--shape-relations")->as<bool>()) {
        json arr = json::array();
        std::string ascii;
        for (const auto& bd : sc::shape_relations(p)) {
            arr.push_back(json::array({bd.gamma, bd.lambda}));
            for (int part : bd.gamma) ascii += std::string(part, '#') + "\n";
            ascii += "|\n";
            for (int part : bd.lambda) ascii += std::string(part, '#') + "\n";
            ascii += "\n";
        }
        rep.j["results"]["shape_relations"] = arr;
        rep.j["results"]["diagrams"] = ascii;
        rep.cite("cubic-minimal-relations-between-minors");
    }
    if (cmd->get_option("--sagbi-bound")->as<bool>()) {
        rep.j["results"]["sagbi_bound"] = sc::sagbi_degree_bound(m, t);
        rep.cite("initial-algebra-generation-bound");
    }
    if (cmd->get_option("--hf")->count()) {
        long d = cmd->get_option("--hf")->as<long>();
        rep.j["results"]["hf"] = sc::hf_at(p, d).get_str();
        if (t * d <= 12) rep.j["results"]["hf_oracle"] = sc::hf_at_oracle(p, d).get_str();
        rep.cite("minor-algebra-hilbert-function");
    }
    if (cmd->get_option("--det-check")->count()) {
        int trials = cmd->get_option("--det-check")->as<int>();
        std::mt19937_64 rng(static_cast<unsigned long>(seed));
        std::uniform_int_distribution<long> entry(-9, 9);
        bool all = true;
        for (int trial = 0; trial < trials; ++trial) {
            size_t sz = static_cast<size_t>(t) + 2;
            std::vector<std::vector<long>> mat(sz, std::vector<long>(sz));
            for (auto& row : mat)
                for (auto& x : row) x = entry(rng);
            all = all && sc::verify_det_relations(t, mat);
        }
        rep.j["results"]["determinantal_relation_vanishes"] = all;
        rep.j["results"]["trials"] = trials;
        rep.cite("determinantal-form-of-the-cubic-relation");
    }
    rep.print();
    return 0;
}

int run_groebner(const std::string& file, int nvars, const std::string& order_name,
                 const std::string& prio, bool deform, bool do_gb, bool initial, bool table,
                 long seed) {
    report rep("groebner", seed);
    rep.table = table;
    sc::term_order order = order_name == "lex" ? sc::term_order::lex(nvars)
                                               : sc::term_order::degrevlex(nvars);
    if (prio == "reversed") {
        std::vector<int> perm(nvars);
        for (int i = 0; i < nvars; ++i) perm[i] = nvars - 1 - i;
        order = order.with_priority(perm);
    }
    auto gens = sc::io::ideal_file_from_text(sc::io::read_file(file), nvars, order);
    rep.j["inputs"]["file"] = file;
    rep.j["inputs"]["n"] = nvars;
    rep.j["inputs"]["order"] = order_name;
    rep.j["inputs"]["priority"] = prio;
    if (do_gb) {
        auto gb = sc::buchberger(gens, order);
        json arr = json::array();
        for (const auto& g : gb.generators) arr.push_back(sc::io::polynomial_to_text(g));
        rep.j["results"]["groebner_basis"] = arr;
        rep.j["results"]["unit_ideal"] = gb.is_unit;
        rep.cite("buchberger-algorithm");
    }
    if (initial) {
        rep.j["results"]["initial_ideal"] = sc::io::ideal_to_json(sc::initial_ideal(gens, order));
        rep.cite("initial-ideal");
    }
    if (deform) {
        auto d = sc::deformation_connectedness_report(gens, order);
        rep.j["results"]["dim"] = d.dim;
        rep.j["results"]["dim_match"] = d.dim_match;
        rep.j["results"]["pure"] = d.pure;
        rep.j["results"]["strongly_connected"] = d.strongly_connected;
        rep.j["results"]["is_CM_of_initial"] = d.is_cm_of_initial;
        rep.j["results"]["radical_of_initial"] = sc::io::ideal_to_json(d.radical_of_initial);
        rep.j["results"]["complex"] = sc::io::complex_to_json(d.complex);
        rep.cite("groebner-deformation-connectedness");
    }
    rep.print();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial commutative algebra toolkit"};
    app.require_subcommand(1);
    bool table = false;
    long seed = 0;
    app.add_flag("--table", table, "render human tables instead of json");
    app.add_option("--seed", seed, "seed for randomized runs (echoed in the report)");

    auto* c_complex = app.add_subcommand("complex", "simplicial complex analysis");
    std::string cfile;
    bool matroid = false, do_dual = false, connectivity = false, strong = false, exch = false;
    c_complex->add_option("--file", cfile, "complex json")->required();
    c_complex->add_flag("--matroid", matroid, "basis exchange test");
    c_complex->add_flag("--dual", do_dual, "facet-complement dual");
    c_complex->add_flag("--connectivity", connectivity, "connectivity degree of the facet primes");
    c_complex->add_flag("--strong", strong, "strong connectedness");
    c_complex->add_flag("--exchange", exch, "symmetric exchange test");

    auto* c_ideal = app.add_subcommand("ideal", "monomial ideal computations");
    c_ideal->add_option("--cover", "cover ideal of a complex json")->expected(1);
    c_ideal->add_option("--sr", "stanley-reisner ideal of a complex json")->expected(1);
    c_ideal->add_option("--file", "ideal json")->expected(1);
    c_ideal->add_option("--prime", "variable prime, comma separated vertices")->expected(1);
    c_ideal->add_option("--n", "ambient variable count for --prime")->expected(1);
    c_ideal->add_option("--weights", "facet weights, comma separated")->expected(1);
    c_ideal->add_option("--symbolic", "symbolic power exponent")->expected(1);
    c_ideal->add_option("--power", "ordinary power exponent")->expected(1);
    c_ideal->add_flag("--depth", "depth of the quotient");
    c_ideal->add_flag("--cm", "cohen-macaulay test");
    c_ideal->add_flag("--reg", "castelnuovo-mumford regularity");
    c_ideal->add_flag("--ass-polar", "associated primes of the polarization");
    c_ideal->add_flag("--polarize", "emit the polarization");

    auto* c_covers = app.add_subcommand("covers", "basic k-cover computations");
    std::string wfile;
    long hf_upto = 0, dim_kmax = 0;
    bool good_weight = false, mult_fit = false;
    c_covers->add_option("--file", wfile, "weighted complex json")->required();
    c_covers->add_option("--hf", hf_upto, "hilbert function values for k = 1..K");
    c_covers->add_option("--dim-abar", dim_kmax, "estimate dim from k = 1..K");
    c_covers->add_flag("--good-weight", good_weight, "solve for an inducing vertex weight");
    c_covers->add_flag("--multiplicity-fit", mult_fit, "fit the multiplicity from --hf values");

    auto* c_minors = app.add_subcommand("minors", "partition combinatorics of minor algebras");
    c_minors->add_option("-t", "minor size")->expected(1)->required();
    c_minors->add_option("-m", "row count")->expected(1)->required();
    c_minors->add_option("-n", "column count")->expected(1)->required();
    c_minors->add_flag("--reg", "a-invariant and regularity");
    c_minors->add_flag("--shape-relations", "cubic relation bi-diagrams");
    c_minors->add_flag("--sagbi-bound", "initial algebra generation bound");
    c_minors->add_option("--hf", "hilbert function in one degree")->expected(1);
    c_minors->add_option("--det-check", "trials of the determinantal relation")->expected(1);

    auto* c_gb = app.add_subcommand("groebner", "groebner bases and deformations");
    std::string gfile, order_name = "lex", prio = "natural";
    int nvars = 0;
    bool deform = false, do_gb = false, initial = false;
    c_gb->add_option("--file", gfile, "line-separated polynomial file")->required();
    c_gb->add_option("--n", nvars, "ambient variable count")->required();
    c_gb->add_option("--order", order_name, "lex or degrevlex")->check(CLI::IsMember({"lex", "degrevlex"}));
    c_gb->add_option("--priority", prio, "natural or reversed")->check(CLI::IsMember({"natural", "reversed"}));
    c_gb->add_flag("--deform-report", deform, "initial complex connectedness report");
    c_gb->add_flag("--gb", do_gb, "print the reduced basis");
    c_gb->add_flag("--initial", initial, "print the initial ideal");

    try {
        app.parse(argc, argv);
        if (c_complex->parsed())
            return run_complex(cfile, matroid, do_dual, connectivity, strong, exch, table, seed);
        if (c_ideal->parsed()) return run_ideal(c_ideal, table, seed);
        if (c_covers->parsed())
            return run_covers(wfile, hf_upto, dim_kmax, good_weight, mult_fit, table, seed);
        if (c_minors->parsed()) return run_minors(c_minors, table, seed);
        if (c_gb->parsed())
            return run_groebner(gfile, nvars, order_name, prio, deform, do_gb, initial, table, seed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const symcomb::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const symcomb::resource_guard& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const symcomb::oracle_too_large& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const symcomb::degree_cap_exceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const symcomb::error& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

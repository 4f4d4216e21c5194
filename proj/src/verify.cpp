#include "primegraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "primegraph/numtheory.hpp"

namespace pg::verify {

namespace nt = pg::numtheory;
namespace gd = pg::groupdata;
namespace gc = pg::graphcore;

using json = nlohmann::json;

namespace {

std::vector<u64> support64(u64 n) {
    std::vector<u64> out;
    for (auto p : nt::prime_support(n)) out.push_back(static_cast<u64>(p));
    return out;
}

std::vector<u64> rho_of(const gd::DegreeSet& d) {
    std::set<u64> primes;
    for (u64 deg : d.degrees)
        for (u64 p : support64(deg)) primes.insert(p);
    return {primes.begin(), primes.end()};
}

std::string fact_str(u64 n) { return nt::factor(n).str(); }

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

InstanceRecord record_for(const std::string& descriptor, const gc::PrimeGraph& g) {
    InstanceRecord r;
    r.descriptor = descriptor;
    r.rho_size = g.graph.size();
    r.triangle_free = !gc::find_triangle(g).has_value();
    r.components = gc::connected_components(g).size();
    if (g.graph.size() == 5) r.figure_a = gc::figure_a_match(g);
    auto shape = gc::shape_predicates(g);
    r.is_cycle = shape.is_cycle;
    r.is_tree = shape.is_tree;
    r.complete_bipartite = shape.complete_bipartite;
    return r;
}

}  // namespace

PalfyResult check_palfy(const gd::DegreeSet& d) {
    std::vector<u64> rho = rho_of(d);
    std::vector<std::vector<u64>> supports;
    for (u64 deg : d.degrees)
        if (deg > 1) supports.push_back(support64(deg));
    auto pair_covered = [&](u64 a, u64 b) {
        for (const auto& s : supports) {
            bool ha = std::find(s.begin(), s.end(), a) != s.end();
            bool hb = std::find(s.begin(), s.end(), b) != s.end();
            if (ha && hb) return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < rho.size(); ++i)
        for (std::size_t j = i + 1; j < rho.size(); ++j)
            for (std::size_t k = j + 1; k < rho.size(); ++k) {
                if (!pair_covered(rho[i], rho[j]) && !pair_covered(rho[i], rho[k]) &&
                    !pair_covered(rho[j], rho[k]))
                    return PalfyResult{false, std::array<u64, 3>{rho[i], rho[j], rho[k]}};
            }
    return PalfyResult{true, std::nullopt};
}

VerificationReport scan_psl2_even(unsigned max_f) {
    if (max_f < 2 || max_f > 60)
        throw std::invalid_argument("scan_psl2_even: max_f must be in [2, 60]");
    Timer timer;
    VerificationReport rep;
    rep.check_id = "psl2-even";
    rep.parameter_range = "f in [2, " + std::to_string(max_f) + "]";
    for (unsigned f = 2; f <= max_f; ++f) {
        u64 q = u64{1} << f;
        gd::DegreeSet cd = gd::psl2_degrees(q);
        gc::PrimeGraph graph = gc::build_prime_graph(cd);
        std::string desc = "PSL2(2^" + std::to_string(f) + ")";
        rep.instances.push_back(record_for(desc, graph));
        const InstanceRecord& rec = rep.instances.back();

        auto fail = [&](const std::string& reason) {
            rep.counterexamples.push_back({desc, reason, {fact_str(q - 1), fact_str(q + 1)}});
        };

        std::vector<u64> pi_minus = support64(q - 1);
        std::vector<u64> pi_plus = support64(q + 1);
        bool small_supports = pi_minus.size() <= 2 && pi_plus.size() <= 2;
        if (rec.triangle_free != small_supports)
            fail("triangle-free does not match |pi(2^f +- 1)| <= 2");

        std::vector<std::vector<u64>> expected{{2}};
        expected.push_back(pi_minus);
        expected.push_back(pi_plus);
        std::sort(expected.begin(), expected.end());
        auto comps = gc::connected_components(graph);
        if (comps != expected) fail("components differ from {2} | pi(2^f-1) | pi(2^f+1)");

        if (rec.triangle_free && rec.rho_size == 5) {
            if (rec.figure_a != gc::FigureA::Second)
                fail("triangle-free 5-vertex instance is not Figure A Second");
            if (f < 6) fail("triangle-free 5-vertex instance with f < 6");
        }

        // maximal-subgroup index ratios stay non-prime-powers in range
        if (f >= 6) {
            for (unsigned b = 1; b < f; ++b) {
                if (f % b != 0) continue;
                unsigned n = f / b;
                if (n < 3 || !nt::is_prime(n)) continue;
                auto check = nt::ratio_prime_power_check(f, b);
                if (check.is_prime_power)
                    rep.counterexamples.push_back(
                        {desc, "index ratio is a prime power at b=" + std::to_string(b),
                         {check.ratio.str()}});
            }
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport scan_psl2_odd(u64 max_q) {
    if (max_q < 7 || max_q > 1000000)
        throw std::invalid_argument("scan_psl2_odd: max_q must be in [7, 10^6]");
    Timer timer;
    VerificationReport rep;
    rep.check_id = "psl2-odd";
    rep.parameter_range = "odd prime powers q in [7, " + std::to_string(max_q) + "]";
    for (u64 q = 7; q <= max_q; q += 2) {
        auto pp = nt::prime_power_decompose(q);
        if (!pp) continue;
        u64 p = pp->first;
        gd::DegreeSet cd = gd::psl2_degrees(q);
        gc::PrimeGraph graph = gc::build_prime_graph(cd);
        std::string desc = "PSL2(" + std::to_string(q) + ")";
        rep.instances.push_back(record_for(desc, graph));
        const InstanceRecord& rec = rep.instances.back();

        auto fail = [&](const std::string& reason) {
            rep.counterexamples.push_back({desc, reason, {fact_str(q - 1), fact_str(q + 1)}});
        };

        bool small_supports =
            support64(q - 1).size() <= 2 && support64(q + 1).size() <= 2;
        if (rec.triangle_free != small_supports)
            fail("triangle-free does not match |pi(q +- 1)| <= 2");
        if (rec.triangle_free && rec.rho_size > 4)
            fail("triangle-free with more than 4 vertices");

        std::vector<std::vector<u64>> expected{{p}, support64(q * q - 1)};
        std::sort(expected.begin(), expected.end());
        if (gc::connected_components(graph) != expected)
            fail("components differ from {p} | pi(q^2 - 1)");
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerificationReport verify_excluded_simple_families(const ScanConfig& cfg,
                                                   const gd::NamedGroupTable& table) {
    Timer timer;
    VerificationReport rep;
    rep.check_id = "excluded-families";
    rep.parameter_range = "Suzuki q^2 <= 2^" + std::to_string(cfg.max_suzuki_exp) +
                          ", PSL3 q <= " + std::to_string(cfg.max_psl3_q);

    // (a) groups whose full tables force a triangle
    for (const char* id : {"J1", "M11", "M23", "A8", "PSL3(4)", "PSU3(4)"}) {
        const gd::NamedGroupEntry* e = table.find(id);
        if (!e) {
            rep.data_gaps.push_back(id);
            continue;
        }
        gc::PrimeGraph graph = gc::build_prime_graph(e->degree_set);
        rep.instances.push_back(record_for(id, graph));
        if (!gc::find_triangle(graph))
            rep.counterexamples.push_back({id, "no triangle in prime graph", {}});
    }

    // (b) Suzuki groups: complete odd part already forces a triangle
    for (unsigned e = 3; e <= cfg.max_suzuki_exp; e += 2) {
        u64 q2 = u64{1} << e;
        gd::PartialVertexData data = gd::suzuki_vertices(q2);
        std::string desc = "2B2(2^" + std::to_string(e) + ")";
        InstanceRecord rec;
        rec.descriptor = desc;
        rec.rho_size = data.vertices.size();
        rec.triangle_free = false;
        rep.instances.push_back(rec);
        if (data.complete_on.size() < 3)
            rep.counterexamples.push_back(
                {desc, "complete part smaller than 3", {fact_str(q2 - 1), fact_str(q2 * q2 + 1)}});
    }

    // (c) PSL3/PSU3 with >= 4 vertices force a triangle the same way
    for (int eps : {1, -1}) {
        for (u64 q = 3; q <= cfg.max_psl3_q; ++q) {
            if (q == 4 || !nt::prime_power_decompose(q)) continue;
            gd::PartialVertexData data = gd::psl3_vertices(eps, q);
            std::string desc = (eps == 1 ? "PSL3(" : "PSU3(") + std::to_string(q) + ")";
            InstanceRecord rec;
            rec.descriptor = desc;
            rec.rho_size = data.vertices.size();
            rec.triangle_free = data.vertices.size() < 4;
            rep.instances.push_back(rec);
            if (data.vertices.size() >= 4 && data.complete_on.size() < 3)
                rep.counterexamples.push_back({desc, "complete part smaller than 3", {}});
        }
    }

    // (d) the |pi(S)| = 3 survivors are exactly triangles
    for (const char* id : {"PSL3(3)", "PSU3(3)"}) {
        const gd::NamedGroupEntry* e = table.find(id);
        if (!e) {
            rep.data_gaps.push_back(id);
            continue;
        }
        gc::PrimeGraph graph = gc::build_prime_graph(e->degree_set);
        rep.instances.push_back(record_for(id, graph));
        bool is_triangle = graph.graph.size() == 3 && graph.graph.edge_count() == 3;
        if (!is_triangle)
            rep.counterexamples.push_back({id, "prime graph is not exactly a triangle", {}});
    }

    std::sort(rep.data_gaps.begin(), rep.data_gaps.end());
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

// ---- generated-instance pool for the theorem scans -------------------------

namespace {

struct GeneratedInstance {
    std::string descriptor;
    gd::DegreeSet degrees;
    gc::PrimeGraph graph;
};

std::vector<GeneratedInstance> generate_instances(const ScanConfig& cfg,
                                                  const gd::NamedGroupTable& table) {
    std::vector<GeneratedInstance> out;
    auto add = [&](std::string desc, gd::DegreeSet d) {
        gc::PrimeGraph g = gc::build_prime_graph(d);
        out.push_back({std::move(desc), std::move(d), std::move(g)});
    };
    for (unsigned f = 2; f <= cfg.max_f; ++f)
        add("PSL2(2^" + std::to_string(f) + ")", gd::psl2_degrees(u64{1} << f));
    for (u64 q = 7; q <= cfg.max_q; q += 2)
        if (nt::prime_power_decompose(q)) add("PSL2(" + std::to_string(q) + ")", gd::psl2_degrees(q));
    for (const auto& e : table.entries()) add(e.id, e.degree_set);
    // coprime-support products of catalog entries
    const auto& entries = table.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            std::vector<u64> ra = rho_of(entries[i].degree_set);
            std::vector<u64> rb = rho_of(entries[j].degree_set);
            std::vector<u64> common;
            std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                                  std::back_inserter(common));
            if (!common.empty()) continue;
            add(entries[i].id + " x " + entries[j].id,
                gd::product_degrees(entries[i].degree_set, entries[j].degree_set));
        }
    }
    return out;
}

VerificationReport theorem_scan(const std::string& check_id, const ScanConfig& cfg,
                                const gd::NamedGroupTable& table) {
    Timer timer;
    VerificationReport rep;
    rep.check_id = check_id;
    rep.parameter_range = "f <= " + std::to_string(cfg.max_f) +
                          ", odd q <= " + std::to_string(cfg.max_q) + ", catalog + products";

    bool first_realized = false, second_realized = false;
    for (const auto& inst : generate_instances(cfg, table)) {
        InstanceRecord rec = record_for(inst.descriptor, inst.graph);
        bool interesting = false;

        if (check_id == "thm-a") {
            if (rec.triangle_free && rec.rho_size >= 6)
                rep.counterexamples.push_back(
                    {inst.descriptor, "triangle-free with >= 6 vertices", {}});
            interesting = rec.triangle_free && rec.rho_size == 5;
        } else if (check_id == "thm-b") {
            if (rec.triangle_free && rec.rho_size == 5) {
                interesting = true;
                if (!rec.figure_a) {
                    rep.counterexamples.push_back(
                        {inst.descriptor, "triangle-free 5-vertex graph matches neither Figure A graph", {}});
                } else if (*rec.figure_a == gc::FigureA::First) {
                    first_realized = true;
                } else {
                    second_realized = true;
                    if (inst.descriptor.rfind("PSL2(2^", 0) != 0)
                        rep.counterexamples.push_back(
                            {inst.descriptor, "Figure A Second realized outside the PSL2(2^f) family", {}});
                }
            }
        } else if (check_id == "thm-c") {
            if ((rec.is_cycle || rec.is_tree) && rec.rho_size >= 5) {
                rep.counterexamples.push_back(
                    {inst.descriptor, "cycle or tree with >= 5 vertices", {}});
                interesting = true;
            }
        } else if (check_id == "bipartite") {
            if (rec.complete_bipartite) {
                interesting = true;
                auto [m, n] = *rec.complete_bipartite;
                if (m + n >= 6)
                    rep.counterexamples.push_back(
                        {inst.descriptor, "complete bipartite with m+n >= 6", {}});
                if (m + n == 5 && !(m == 2 && n == 3))
                    rep.counterexamples.push_back(
                        {inst.descriptor, "5-vertex complete bipartite graph other than K_{2,3}", {}});
            }
        }
        if (interesting) rep.instances.push_back(std::move(rec));
    }

    if (check_id == "thm-b") {
        if (!first_realized)
            rep.counterexamples.push_back({"(scan)", "Figure A First not realized in range", {}});
        if (!second_realized)
            rep.counterexamples.push_back({"(scan)", "Figure A Second not realized in range", {}});
    }
    if (check_id == "thm-c") {
        // the two Figure A graphs are neither cycles nor trees
        for (auto which : {gc::FigureA::First, gc::FigureA::Second}) {
            auto shape = gc::shape_predicates(gc::figure_a_template(which));
            if (shape.is_cycle || shape.is_tree)
                rep.counterexamples.push_back(
                    {"Figure A " + gc::figure_a_name(which), "template is a cycle or tree", {}});
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

}  // namespace

VerificationReport verify_theorem_a(const ScanConfig& cfg, const gd::NamedGroupTable& table) {
    return theorem_scan("thm-a", cfg, table);
}
VerificationReport verify_theorem_b(const ScanConfig& cfg, const gd::NamedGroupTable& table) {
    return theorem_scan("thm-b", cfg, table);
}
VerificationReport verify_theorem_c(const ScanConfig& cfg, const gd::NamedGroupTable& table) {
    return theorem_scan("thm-c", cfg, table);
}
VerificationReport verify_bipartite_bound(const ScanConfig& cfg,
                                          const gd::NamedGroupTable& table) {
    return theorem_scan("bipartite", cfg, table);
}

// ---- classification --------------------------------------------------------

namespace {

struct WitnessEntry {
    gd::GroupDescriptor descriptor;
    gc::PrimeGraph graph;
};

std::vector<WitnessEntry> witness_catalog(const gd::NamedGroupTable& table) {
    std::vector<WitnessEntry> out;
    auto add = [&](gd::GroupDescriptor desc) {
        gd::DegreeSet d = gd::degrees_of(desc, table);
        gc::PrimeGraph g = gc::build_prime_graph(d);
        if (g.graph.size() <= 8) out.push_back({std::move(desc), std::move(g)});
    };
    for (u64 q : {u64{4}, u64{7}, u64{8}, u64{9}, u64{29}, u64{64}}) add(gd::make_psl2(q));
    for (const auto& e : table.entries()) add(gd::make_named(e.id));
    if (table.find("A5") && table.find("23^(1+2):11"))
        add(gd::make_product(gd::make_named("A5"), gd::make_named("23^(1+2):11")));
    if (table.find("PSL2(8)") && table.find("23^(1+2):11"))
        add(gd::make_product(gd::make_named("PSL2(8)"), gd::make_named("23^(1+2):11")));
    return out;
}

ClassificationVerdict impossible(std::string citation) {
    return {ClassificationVerdict::Kind::ProvenImpossible, std::nullopt, std::move(citation)};
}

}  // namespace

std::string verdict_kind_name(ClassificationVerdict::Kind k) {
    switch (k) {
        case ClassificationVerdict::Kind::OccursWithWitness: return "OccursWithWitness";
        case ClassificationVerdict::Kind::OccursSolvableOnly: return "OccursSolvableOnly";
        case ClassificationVerdict::Kind::ProvenImpossible: return "ProvenImpossible";
        case ClassificationVerdict::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

ClassificationVerdict classify(const gc::PrimeGraph& g, const gd::NamedGroupTable& table) {
    if (g.partial) throw std::invalid_argument("classify: partial graphs are not supported");
    if (g.graph.size() > 8) throw std::invalid_argument("classify: graphs above 8 vertices are out of scope");

    std::size_t n = g.graph.size();
    bool triangle_free = !gc::find_triangle(g).has_value();
    auto shape = gc::shape_predicates(g);

    if (triangle_free && n >= 6)
        return impossible("Theorem A: a triangle-free prime graph has at most 5 vertices");
    if ((shape.is_cycle || shape.is_tree) && n >= 5)
        return impossible("Theorem C: a prime graph that is a cycle or a tree has at most 4 vertices");
    if (shape.is_path && n == 4)
        return impossible("a path on 4 vertices is never a prime graph (Lewis-White)");
    if (shape.is_cycle && n == 8)
        return impossible("an octagon is never a prime graph (Moreto-Tiep)");

    auto fig = gc::figure_a_match(g);
    if (triangle_free && n == 5 && !fig)
        return impossible(
            "Theorem B: the only triangle-free prime graphs on 5 vertices are the two Figure A graphs");

    auto verified_witness = [&](const gd::GroupDescriptor& desc,
                                std::string citation) -> std::optional<ClassificationVerdict> {
        // re-verify: rebuild the witness graph and check isomorphism
        gc::PrimeGraph rebuilt = gc::build_prime_graph(gd::degrees_of(desc, table));
        if (rebuilt.graph.size() > 8 || !gc::is_isomorphic(rebuilt, g)) return std::nullopt;
        return ClassificationVerdict{ClassificationVerdict::Kind::OccursWithWitness, desc,
                                     std::move(citation)};
    };

    if (fig == gc::FigureA::First && table.find("A5") && table.find("23^(1+2):11")) {
        auto v = verified_witness(
            gd::make_product(gd::make_named("A5"), gd::make_named("23^(1+2):11")),
            "Theorem B(2): Figure A First occurs for A5 x K with cd(K) = {1,11,23}");
        if (v) return *v;
    }
    if (fig == gc::FigureA::Second) {
        auto v = verified_witness(gd::make_psl2(64),
                                  "Theorem B(1): Figure A Second occurs for PSL2(2^f), f >= 6");
        if (v) return *v;
    }
    for (const auto& w : witness_catalog(table)) {
        if (w.graph.graph.size() != n) continue;
        if (!gc::is_isomorphic(w.graph, g)) continue;
        auto v = verified_witness(w.descriptor, "witnessed by " + gd::describe(w.descriptor));
        if (v) return *v;
    }

    if (shape.is_cycle && n == 4)
        return {ClassificationVerdict::Kind::OccursSolvableOnly, std::nullopt,
                "a square prime graph occurs, and forces a solvable direct product (Lewis-Meng, Lewis-White)"};

    return {ClassificationVerdict::Kind::Unknown, std::nullopt, ""};
}

// ---- serialization ---------------------------------------------------------

namespace {

json record_json(const InstanceRecord& r) {
    json j{{"descriptor", r.descriptor},
           {"rho_size", r.rho_size},
           {"triangle_free", r.triangle_free},
           {"components", r.components},
           {"is_cycle", r.is_cycle},
           {"is_tree", r.is_tree}};
    j["figure_a"] = r.figure_a ? json(gc::figure_a_name(*r.figure_a)) : json(nullptr);
    j["complete_bipartite"] =
        r.complete_bipartite
            ? json::array({r.complete_bipartite->first, r.complete_bipartite->second})
            : json(nullptr);
    return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r, bool include_timing) {
    json j;
    j["check_id"] = r.check_id;
    j["range"] = r.parameter_range;
    j["instances"] = json::array();
    for (const auto& inst : r.instances) j["instances"].push_back(record_json(inst));
    j["counterexamples"] = json::array();
    for (const auto& c : r.counterexamples)
        j["counterexamples"].push_back(
            {{"descriptor", c.descriptor}, {"reason", c.reason}, {"factorizations", c.factorizations}});
    j["data_gaps"] = r.data_gaps;
    j["success"] = r.success();
    if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r, bool include_timing) {
    std::string out = "check: " + r.check_id + "\nrange: " + r.parameter_range + "\n";
    out += "instances: " + std::to_string(r.instances.size()) + "\n";
    for (const auto& c : r.counterexamples) {
        out += "COUNTEREXAMPLE " + c.descriptor + ": " + c.reason + "\n";
        for (const auto& f : c.factorizations) out += "  " + f + "\n";
    }
    for (const auto& g : r.data_gaps) out += "DATA GAP: missing bundled entry " + g + "\n";
    out += std::string("result: ") + (r.success() ? "ok" : "FAILED") + "\n";
    if (include_timing)
        out += "elapsed: " + std::to_string(r.elapsed_seconds) + "s\n";
    return out;
}

}  // namespace pg::verify

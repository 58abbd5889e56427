#include "isolation/harness/commands.hpp"

#include "isolation/cycles.hpp"
#include "isolation/error.hpp"
#include "isolation/exact.hpp"
#include "isolation/generators.hpp"
#include "isolation/harness/formats.hpp"
#include "isolation/harness/search.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

namespace isolation::harness {

using nlohmann::json;

namespace {

    auto to_json(const VertexSet & s) -> json
    {
        return json(s.members());
    }

    auto brace(const VertexSet & s) -> std::string
    {
        std::string out = "{";
        for (Vertex u : s) {
            if (out.size() > 1)
                out += ',';
            out += std::to_string(u);
        }
        return out + "}";
    }

    class Stopwatch {
    public:
        [[nodiscard]] auto ms() const -> long long
        {
            return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - _start)
                .count();
        }

    private:
        std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
    };

    auto base_record(std::size_t index, const Graph & g) -> json
    {
        return {{"index", index}, {"order", g.order()}, {"size", g.size()}};
    }

    auto graph_label(std::size_t index, const Graph & g) -> std::string
    {
        return "graph " + std::to_string(index) + " (n=" + std::to_string(g.order()) + ", m="
            + std::to_string(g.size()) + ")";
    }

    auto lower(std::string s) -> std::string
    {
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
        return s;
    }

    void track_max_ratio(Ratio & best, bool & any, Ratio r)
    {
        if (! any || best < r)
            best = r;
        any = true;
    }

} // namespace

auto parse_kind(const std::string & name) -> SKind
{
    const std::string s = lower(name);
    if (s == "p3")
        return SKind::p3;
    if (s == "c3")
        return SKind::c3;
    if (s == "c7")
        return SKind::c7;
    if (s == "c11")
        return SKind::c11;
    throw IsolationError(ErrorCode::bad_spec, "unknown gadget kind '" + name + "'");
}

auto parse_assertion(const std::string & name) -> Assertion
{
    const std::string s = lower(name);
    if (s == "thm11")
        return Assertion::thm11;
    if (s == "thm15")
        return Assertion::thm15;
    if (s == "thm16")
        return Assertion::thm16;
    if (s == "thm17")
        return Assertion::thm17;
    throw IsolationError(ErrorCode::parse_error, "unknown assertion '" + name + "'");
}

auto parse_track(const std::string & name) -> Track
{
    const std::string s = lower(name);
    if (s == "thm16")
        return Track::thm16;
    if (s == "thm17")
        return Track::thm17;
    throw IsolationError(ErrorCode::parse_error, "unknown track '" + name + "'");
}

auto parse_vertex_csv(const std::string & text) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
            item.end());
        if (item.empty())
            continue;
        if (! std::all_of(item.begin(), item.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw IsolationError(ErrorCode::parse_error, "'" + item + "' is not a vertex id");
        out.push_back(std::stoi(item));
    }
    return out;
}

auto cmd_compute(const GraphInput & input, int k) -> RunReport
{
    if (k < 0)
        throw IsolationError(ErrorCode::precondition_violation, "k must be non-negative");
    RunReport report;
    report.command = "compute";
    report.inputs = {{"file", input.source}, {"k", k}, {"graphs", input.graphs.size()}};

    Ratio max_ratio;
    bool any = false;
    for (std::size_t i = 0; i < input.graphs.size(); ++i) {
        const Graph & g = input.graphs[i];
        Stopwatch clock;
        const auto cert = iota_exact(g, k);
        json rec = base_record(i, g);
        rec["k"] = k;
        rec["iota"] = cert.size();
        rec["witness"] = to_json(cert.witness);
        rec["residual_max_degree"] = cert.residual_max_degree;
        rec["time_ms"] = clock.ms();
        report.records.push_back(rec);
        if (g.order() > 0)
            track_max_ratio(max_ratio, any, Ratio{cert.size(), g.order()}.reduced());
        report.lines.push_back(graph_label(i, g) + ": iota_" + std::to_string(k) + " = " + std::to_string(cert.size())
            + " witness " + brace(cert.witness));
    }
    report.aggregate = {{"graphs", input.graphs.size()}, {"violations", 0}};
    if (any)
        report.aggregate["max_ratio"] = max_ratio.json();
    report.lines.push_back("graphs: " + std::to_string(input.graphs.size())
        + (any ? ", max ratio " + max_ratio.str() : std::string()));
    return report;
}

auto cmd_verify(const GraphInput & input, const VertexSet & witness, int k) -> RunReport
{
    if (k < 0)
        throw IsolationError(ErrorCode::precondition_violation, "k must be non-negative");
    RunReport report;
    report.command = "verify";
    report.inputs = {{"file", input.source}, {"k", k}, {"witness", to_json(witness)}, {"graphs", input.graphs.size()}};

    for (std::size_t i = 0; i < input.graphs.size(); ++i) {
        const Graph & g = input.graphs[i];
        Stopwatch clock;
        const auto check = is_k_isolating(g, witness, k);
        json rec = base_record(i, g);
        rec["isolating"] = check.isolating;
        rec["residual_max_degree"] = check.residual_max_degree;
        rec["time_ms"] = clock.ms();
        report.records.push_back(rec);
        if (! check.isolating)
            ++report.violations;
        report.lines.push_back(graph_label(i, g) + ": " + brace(witness) + (check.isolating ? " is" : " is not") + " "
            + std::to_string(k) + "-isolating (residual max degree " + std::to_string(check.residual_max_degree)
            + ")");
    }
    report.aggregate = {{"graphs", input.graphs.size()}, {"violations", report.violations}};
    report.lines.push_back("violations: " + std::to_string(report.violations));
    return report;
}

namespace {

    /// Reason the graph is outside the track's hypothesis, with a certificate cycle when one exists.
    auto rejection(const Graph & g, Track track, json & rec) -> std::optional<std::string>
    {
        if (g.order() > 0 && ! is_connected(g))
            return "disconnected";
        if (const SKind kind = classify_s_graph(g); kind != SKind::none)
            return std::string("is ") + to_string(kind);
        auto report_cycle = [&](const CycleWitness & c, const std::string & what) {
            rec["cycle"] = c.vertices;
            return "contains " + what;
        };
        if (track == Track::thm16) {
            if (auto c = find_cycle_of_length(g, 6))
                return report_cycle(*c, "6-cycle");
        }
        else {
            if (auto c = find_induced_cycle_of_length(g, 5))
                return report_cycle(*c, "induced 5-cycle");
            if (auto c = find_induced_cycle_of_length(g, 6))
                return report_cycle(*c, "induced 6-cycle");
        }
        return std::nullopt;
    }

    auto trace_json(const CaseTrace & trace) -> json
    {
        json steps = json::array();
        for (const auto & s : trace.steps)
            steps.push_back({{"label", s.label}, {"fragment", to_json(s.fragment)}, {"scope_order", s.scope.size()}});
        return steps;
    }

} // namespace

auto cmd_construct(const GraphInput & input, const ConstructRequest & request) -> RunReport
{
    RunReport report;
    report.command = "construct";
    report.inputs = {{"file", input.source}, {"track", to_string(request.track)}, {"trace", request.trace},
        {"graphs", input.graphs.size()}};

    int rejected = 0, built = 0;
    for (std::size_t i = 0; i < input.graphs.size(); ++i) {
        const Graph & g = input.graphs[i];
        Stopwatch clock;
        json rec = base_record(i, g);
        const std::string head = graph_label(i, g) + ": ";

        if (auto reason = rejection(g, request.track, rec)) {
            ++rejected;
            rec["status"] = "rejected";
            rec["reason"] = *reason;
            std::string line = head + "rejected, " + *reason;
            if (rec.contains("cycle")) {
                line += " [";
                for (std::size_t j = 0; j < rec["cycle"].size(); ++j)
                    line += (j ? " " : "") + std::to_string(rec["cycle"][j].get<int>());
                line += "]";
            }
            report.lines.push_back(line);
            rec["time_ms"] = clock.ms();
            report.records.push_back(rec);
            continue;
        }

        try {
            const auto result = construct(g, request.track, {request.fallback_to_exact});
            const auto check = is_k_isolating(g, result.witness, 1);
            const int bound = g.order() / 4;
            const bool within = static_cast<int>(result.witness.size()) <= bound;
            ++built;
            rec["status"] = "ok";
            rec["witness"] = to_json(result.witness);
            rec["witness_size"] = result.witness.size();
            rec["bound"] = bound;
            rec["within_bound"] = within;
            rec["verified"] = check.isolating;
            rec["used_fallback"] = result.trace.used_fallback;
            if (request.trace)
                rec["trace"] = trace_json(result.trace);
            if (! within || ! check.isolating)
                ++report.violations;
            report.lines.push_back(head + "witness " + brace(result.witness) + " size "
                + std::to_string(result.witness.size()) + " <= " + std::to_string(bound)
                + (within && check.isolating ? " verified" : " FAILED")
                + (result.trace.used_fallback ? " (exact fallback used)" : ""));
            if (request.trace)
                for (const auto & s : result.trace.steps)
                    report.lines.push_back("  " + s.label + " " + brace(s.fragment));
        }
        catch (const CaseExhaustion & e) {
            ++report.violations;
            rec["status"] = "failed";
            rec["reason"] = e.what();
            rec["trace"] = trace_json(e.trace());
            rec["subgraph"] = e.subgraph();
            report.lines.push_back(head + "FAILED " + e.what());
        }
        rec["time_ms"] = clock.ms();
        report.records.push_back(rec);
    }
    report.aggregate = {{"graphs", input.graphs.size()}, {"constructed", built}, {"rejected", rejected},
        {"violations", report.violations}};
    report.lines.push_back("constructed " + std::to_string(built) + ", rejected " + std::to_string(rejected)
        + ", violations " + std::to_string(report.violations));
    return report;
}

auto cmd_extremal(const ExtremalRequest & request) -> RunReport
{
    if (request.t < 1)
        throw IsolationError(ErrorCode::bad_spec, "t must be at least 1");
    ExtremalSpec spec;
    const std::string shape = lower(request.backbone);
    if (shape == "path")
        spec.backbone = path_graph(request.t);
    else if (shape == "star")
        spec.backbone = star_graph(request.t - 1);
    else if (shape == "cycle")
        spec.backbone = request.t >= 3 ? cycle_graph(request.t) : path_graph(request.t);
    else if (shape == "complete")
        spec.backbone = complete_graph(request.t);
    else
        throw IsolationError(ErrorCode::bad_spec, "unknown backbone '" + request.backbone + "'");
    spec.gadget_kinds = request.kinds;
    if (spec.gadget_kinds.size() == 1)
        spec.gadget_kinds.assign(static_cast<std::size_t>(request.t), request.kinds.front());
    spec.join_points = request.join_points;
    spec.leaves = request.leaves;

    Stopwatch clock;
    const auto inst = build_extremal(spec);
    const Graph & g = inst.graph;
    const auto check = is_k_isolating(g, inst.designated_witness, 1);

    RunReport report;
    report.command = "extremal";
    json kinds = json::array();
    for (SKind kind : spec.gadget_kinds)
        kinds.push_back(to_string(kind));
    report.inputs = {{"t", request.t}, {"kinds", kinds}, {"leaves", request.leaves}, {"backbone", shape},
        {"out", request.out}};

    json rec = base_record(0, g);
    rec["witness"] = to_json(inst.designated_witness);
    rec["witness_size"] = inst.designated_witness.size();
    rec["verified"] = check.isolating;
    rec["ratio"] = Ratio{static_cast<long long>(inst.designated_witness.size()), g.order()}.reduced().json();
    if (! check.isolating)
        ++report.violations;
    std::string line = "extremal instance n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size())
        + ": witness " + brace(inst.designated_witness) + (check.isolating ? " verified" : " NOT isolating");
    if (request.exact) {
        const auto cert = iota_exact(g, 1);
        rec["iota"] = cert.size();
        line += ", exact iota_1 = " + std::to_string(cert.size());
    }
    rec["time_ms"] = clock.ms();
    report.records.push_back(rec);
    report.lines.push_back(line);

    if (! request.out.empty()) {
        write_text_file(request.out, write_edge_list(g));
        report.lines.push_back("wrote " + request.out);
    }
    report.aggregate = {{"graphs", 1}, {"violations", report.violations}};
    return report;
}

namespace {

    struct Hypothesis {
        const char * name;
        /// bound check: returns true when iota respects the bound on n vertices
        bool (*within)(long long iota, long long n, int k);
        bool (*admits)(const Graph & g);
        Ratio bound;
    };

    auto is_c6(const Graph & g) -> bool
    {
        return g.order() == 6 && g.size() == 6 && is_connected(g)
            && std::all_of(g.edges().begin(), g.edges().end(), [&](Edge e) { return g.degree(e.first) == 2; });
    }

    auto hypothesis(Assertion a, int k) -> Hypothesis
    {
        switch (a) {
        case Assertion::thm11:
            return {"thm11", [](long long i, long long n, int kk) { return i * (kk + 2) <= n; },
                [](const Graph &) { return true; }, Ratio{1, k + 2}};
        case Assertion::thm15:
            return {"thm15", [](long long i, long long n, int) { return 7 * i <= 2 * n; },
                [](const Graph & g) {
                    const SKind kind = classify_s_graph(g);
                    return kind != SKind::p3 && kind != SKind::c3 && ! is_c6(g);
                },
                Ratio{2, 7}};
        case Assertion::thm16:
            return {"thm16", [](long long i, long long n, int) { return 4 * i <= n; },
                [](const Graph & g) {
                    return classify_s_graph(g) == SKind::none && is_admissible(g, AdmissibleClass::c6_free);
                },
                Ratio{1, 4}};
        case Assertion::thm17:
            return {"thm17", [](long long i, long long n, int) { return 4 * i <= n; },
                [](const Graph & g) {
                    return classify_s_graph(g) == SKind::none && is_admissible(g, AdmissibleClass::induced56_free);
                },
                Ratio{1, 4}};
        }
        throw IsolationError(ErrorCode::parse_error, "unknown assertion");
    }

} // namespace

auto cmd_scan(const ScanRequest & request) -> RunReport
{
    if (request.nmax < 1 || request.nmax > max_enumeration_graph_order)
        throw IsolationError(ErrorCode::order_too_large,
            "scan supports 1 <= nmax <= " + std::to_string(max_enumeration_graph_order));
    const int k = request.assertion == Assertion::thm11 ? request.k : 1;
    if (k < 0)
        throw IsolationError(ErrorCode::precondition_violation, "k must be non-negative");
    const Hypothesis hyp = hypothesis(request.assertion, k);

    RunReport report;
    report.command = "scan";
    report.inputs = {{"nmax", request.nmax}, {"assert", hyp.name}, {"k", k}, {"bound", hyp.bound.json()}};

    long long checked = 0;
    Ratio max_ratio;
    bool any = false;
    for (int n = 1; n <= request.nmax; ++n) {
        const auto graphs = enumerate_connected(n);
        long long tested = 0, tight = 0, violations = 0;
        int max_iota = 0;
        json violators = json::array();
        for (const Graph & g : graphs) {
            if (! hyp.admits(g))
                continue;
            ++tested;
            const int iota = iota_exact(g, k).size();
            max_iota = std::max(max_iota, iota);
            if (! hyp.within(iota, n, k)) {
                ++violations;
                violators.push_back(write_graph6(g));
            }
            else if (Ratio{iota, n} == hyp.bound) {
                ++tight;
            }
        }
        checked += tested;
        report.violations += static_cast<int>(violations);
        json rec = {{"n", n}, {"connected", graphs.size()}, {"checked", tested}, {"max_iota", max_iota},
            {"tight", tight}, {"violations", violations}, {"violators", violators}};
        if (tested > 0) {
            const Ratio r = Ratio{max_iota, n}.reduced();
            rec["max_ratio"] = r.json();
            track_max_ratio(max_ratio, any, r);
        }
        report.records.push_back(rec);
        report.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(tested) + " of "
            + std::to_string(graphs.size()) + " connected graphs checked, max iota_" + std::to_string(k) + " = "
            + std::to_string(max_iota) + ", at bound " + std::to_string(tight) + ", violations "
            + std::to_string(violations));
    }
    report.aggregate = {{"checked", checked}, {"violations", report.violations}};
    if (any)
        report.aggregate["max_ratio"] = max_ratio.json();
    report.lines.push_back(std::string(hyp.name) + " bound " + hyp.bound.str() + ": checked " + std::to_string(checked)
        + " graphs, violations " + std::to_string(report.violations));
    return report;
}

auto cmd_search(const SearchRequest & request) -> RunReport
{
    SearchOptions options{request.nmin, request.nmax, request.budget, request.seed, request.restart_after};
    const SearchState state = run_search(options);

    RunReport report;
    report.command = "search";
    report.inputs = {{"class", "induced6free"}, {"nmin", request.nmin}, {"nmax", request.nmax},
        {"budget", request.budget}, {"seed", request.seed}, {"restart_after", request.restart_after}};

    for (const auto & imp : state.history) {
        report.records.push_back({{"step", imp.step}, {"order", imp.graph.order()}, {"size", imp.graph.size()},
            {"iota", imp.iota}, {"ratio", imp.ratio.reduced().json()}, {"graph6", write_graph6(imp.graph)}});
        report.lines.push_back("step " + std::to_string(imp.step) + ": n=" + std::to_string(imp.graph.order())
            + " iota_1=" + std::to_string(imp.iota) + " ratio " + imp.ratio.reduced().str());
    }

    // re-verify the reported instance independently of the climb
    const bool class_ok = search_eligible(state.best, request.nmin, request.nmax);
    const auto check = is_k_isolating(state.best, state.best_witness, 1);
    const bool ratio_ok = Ratio{iota_exact(state.best, 1).size(), state.best.order()} == state.best_ratio;
    if (! class_ok || ! check.isolating || ! ratio_ok)
        ++report.violations;

    const Ratio best = state.best_ratio.reduced();
    report.aggregate = {{"best_ratio", best.json()}, {"best_order", state.best.order()},
        {"best_graph6", write_graph6(state.best)}, {"best_witness", to_json(state.best_witness)},
        {"steps", state.steps}, {"accepted", state.accepted}, {"restarts", state.restarts},
        {"above_quarter", Ratio{1, 4} < best}, {"verified", class_ok && check.isolating && ratio_ok},
        {"violations", report.violations}};
    report.lines.push_back("best ratio " + best.str() + " on n=" + std::to_string(state.best.order()) + " ("
        + write_graph6(state.best) + "), " + std::to_string(state.steps) + " steps, "
        + std::to_string(state.accepted) + " accepted, " + std::to_string(state.restarts) + " restarts"
        + (report.violations ? ", RE-VERIFICATION FAILED" : ""));

    if (! request.out.empty()) {
        write_text_file(request.out, write_edge_list(state.best));
        report.lines.push_back("wrote " + request.out);
    }
    return report;
}

} // namespace isolation::harness

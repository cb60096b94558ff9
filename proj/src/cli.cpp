#include "qsp/cli.hpp"
#include "qsp/examples.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qsp {

using nlohmann::json;

namespace {

CycNum parse_entry(const json& v, int N, const std::string& what) {
    if (v.is_number_integer()) return CycNum(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_cyc(v.get<std::string>(), N);
        } catch (const std::exception& e) {
            throw InputError(what + ": cannot parse '" + v.get<std::string>() + "': " + e.what());
        }
    }
    throw InputError(what + ": expected an integer or a string literal");
}

int get_int(const json& j, const char* key, int fallback, bool required) {
    if (!j.contains(key)) {
        if (required) throw InputError(std::string("context: missing field '") + key + "'");
        return fallback;
    }
    if (!j[key].is_number_integer()) throw InputError(std::string("context: field '") + key + "' must be an integer");
    return j[key].get<int>();
}

Word parse_word(const json& w, int n) {
    if (!w.is_array()) throw InputError("relation: word must be an array of letters");
    Word out;
    for (auto& l : w) {
        if (!l.is_number_integer()) throw InputError("relation: letters must be integers");
        int x = l.get<int>();
        if (x < 1 || x > n) throw InputError("relation: letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
        out.push_back(static_cast<std::uint8_t>(x - 1));
    }
    return out;
}

json parameters_json(const std::vector<Scalar>& c) {
    json a = json::array();
    for (auto& x : c) a.push_back(x.str());
    return a;
}

json relation_json(const FreeElement& f, int n) {
    Weight mu = f.terms().empty() ? zero_weight(n) : word_weight(f.terms().begin()->first, n);
    return json{{"degree", weight_json(mu)}, {"terms", terms_json(f)}};
}

std::shared_ptr<NicholsAlgebra> nichols_for(const Context& ctx, int threads) {
    auto alg = std::make_shared<NicholsAlgebra>(ctx);
    precompute_degrees(*alg, ctx.D, threads);
    return alg;
}

json words_json(const std::vector<Word>& ws) {
    json a = json::array();
    for (auto& w : ws) a.push_back(word_json(w));
    return a;
}

json cmd_pairing(const Context& ctx, int threads) {
    auto alg = nichols_for(ctx, threads);
    json degs = json::array();
    for (auto& mu : degrees_up_to(ctx.n, ctx.D)) {
        const NicholsDegreeData& d = alg->degree_data(mu);
        degs.push_back(json{{"degree", weight_json(mu)}, {"words", words_json(d.all_words)}, {"gram", matrix_json(d.gram)}});
    }
    return json{{"degrees", degs}};
}

json cmd_basis(const Context& ctx, const std::optional<std::vector<FreeElement>>& rels, int threads) {
    json degs = json::array();
    if (rels) {
        PreNicholsPresentation pres(ctx.n, *rels);
        for (auto& mu : degrees_up_to(ctx.n, ctx.D)) {
            auto b = pres.basis(mu, Side::F);
            degs.push_back(json{{"degree", weight_json(mu)}, {"basis", words_json(b)}, {"rank", b.size()}});
        }
        json rj = json::array();
        for (auto& f : *rels) rj.push_back(relation_json(f, ctx.n));
        return json{{"degrees", degs}, {"relations", rj}};
    }
    auto alg = nichols_for(ctx, threads);
    for (auto& mu : degrees_up_to(ctx.n, ctx.D)) {
        const NicholsDegreeData& d = alg->degree_data(mu);
        json kernel = json::array();
        for (auto& k : d.kernel_f) kernel.push_back(terms_json(k));
        degs.push_back(json{{"degree", weight_json(mu)},
                            {"words", words_json(d.all_words)},
                            {"rank", d.rank()},
                            {"basis", words_json(d.f_basis())},
                            {"basis_e", words_json(d.e_basis())},
                            {"kernel", kernel}});
    }
    json gens = json::array();
    for (auto& g : ideal_generators(*alg, ctx.D)) gens.push_back(relation_json(g, ctx.n));
    return json{{"degrees", degs}, {"generators", gens}};
}

json cmd_theta(const Context& ctx, int threads) {
    auto alg = nichols_for(ctx, threads);
    json comps = json::array();
    for (auto& tc : theta_truncated(*alg))
        comps.push_back(json{{"degree", weight_json(tc.degree)},
                             {"f_words", words_json(tc.f_words)},
                             {"e_words", words_json(tc.e_words)},
                             {"coef", matrix_json(tc.coef)}});
    return json{{"components", comps}};
}

std::vector<FreeElement> default_relations(const Context& ctx, const std::optional<std::vector<FreeElement>>& rels, int threads) {
    if (rels) return *rels;
    return ideal_generators(*nichols_for(ctx, threads), ctx.D);
}

JobResult cmd_conditions(const Context& ctx, const std::vector<Scalar>& c, const std::optional<std::vector<FreeElement>>& rels,
                         int threads) {
    auto relations = default_relations(ctx, rels, threads);
    auto cons = condition_c(ctx, c, relations);
    json rj = json::array(), cj = json::array();
    for (auto& f : relations) rj.push_back(relation_json(f, ctx.n));
    for (auto& k : cons) {
        const FreeElement& f = relations[k.relation];
        cj.push_back(json{{"relation", k.relation},
                          {"degree", weight_json(word_weight(f.terms().begin()->first, ctx.n))},
                          {"value", k.value.str()},
                          {"monomials", scalar_json(k.value)}});
    }
    JobResult r;
    r.output = json{{"parameters", parameters_json(c)}, {"relations", rj}, {"constraints", cj}, {"condition_holds", cons.empty()}};
    r.exit_code = is_numeric(c) && !cons.empty() ? 1 : 0;
    return r;
}

JobResult cmd_relations(const Context& ctx, const std::vector<Scalar>& c, const std::optional<std::vector<FreeElement>>& rels,
                        int threads) {
    std::shared_ptr<const Reducer> red;
    std::vector<FreeElement> relations;
    if (rels) {
        relations = *rels;
        red = std::make_shared<PreNicholsPresentation>(ctx.n, relations);
    } else {
        auto alg = nichols_for(ctx, threads);
        relations = ideal_generators(*alg, ctx.D);
        red = alg;
    }
    Coideal target(ctx, red, c);
    json out = json::array();
    bool all = true;
    for (auto& g : generate_relations(target, relations)) {
        out.push_back(json{{"p", relation_json(g.p, ctx.n)}, {"r", star_terms_json(g.r)}, {"verified", g.verified}});
        all = all && g.verified;
    }
    JobResult r;
    r.output = json{{"parameters", parameters_json(c)}, {"relations", out}};
    r.exit_code = all ? 0 : 1;
    return r;
}

std::unique_ptr<KMatrixSuite> make_suite(const Context& ctx, const std::vector<Scalar>& c, const std::optional<std::vector<FreeElement>>& rels) {
    if (!is_numeric(c)) throw InputError("kmatrix and verify need numeric parameters (--c)");
    if (rels) throw InputError("kmatrix and verify work with the Nichols algebra; drop --relations");
    try {
        return std::make_unique<KMatrixSuite>(ctx, c);
    } catch (const std::domain_error& e) {
        throw InputError(std::string("parameters unusable: ") + e.what());
    }
}

json cmd_kmatrix(const KMatrixSuite& s) {
    json comps = json::array();
    for (auto& qc : s.quasi_k_components(s.bound()).components) {
        json left = json::array();
        for (auto& b : qc.left) left.push_back(b.str("E", "F"));
        comps.push_back(json{{"degree", weight_json(qc.degree)},
                             {"f_words", words_json(qc.f_words)},
                             {"e_words", words_json(qc.e_words)},
                             {"coef", matrix_json(qc.coef)},
                             {"left", left}});
    }
    return json{{"components", comps}};
}

JobResult cmd_verify(const KMatrixSuite& s) {
    Report all;
    for (auto part : {s.check_theta_relations(), s.check_intertwiner(), s.check_coproduct_identities(), s.check_weak_quasitriangular()})
        all.insert(all.end(), part.begin(), part.end());
    json res = json::array();
    for (auto& r : all)
        res.push_back(json{{"identity", r.identity}, {"input", r.input}, {"pass", r.pass}, {"first_failing_degree", r.first_failing_degree}});
    JobResult out;
    out.output = json{{"results", res}, {"pass", all_pass(all)}, {"sigma_bar", s.sigma_bar_available()}};
    out.exit_code = all_pass(all) ? 0 : 1;
    return out;
}

}  // namespace

Context parse_context(const json& j) {
    if (!j.is_object()) throw InputError("context: expected a JSON object");
    Context ctx;
    ctx.N = get_int(j, "N", 1, true);
    if (ctx.N < 1) throw InputError("context: N must be positive");
    if (!j.contains("q") || !j["q"].is_array()) throw InputError("context: missing matrix 'q'");
    const json& q = j["q"];
    ctx.n = static_cast<int>(q.size());
    if (ctx.n == 0) throw InputError("context: q is empty");
    if (j.contains("n") && get_int(j, "n", 0, true) != ctx.n) throw InputError("context: n does not match the size of q");
    for (auto& row : q) {
        if (!row.is_array() || static_cast<int>(row.size()) != ctx.n) throw InputError("context: q must be square");
        std::vector<CycNum> r;
        for (auto& v : row) {
            r.push_back(parse_entry(v, ctx.N, "context q"));
            if (r.back().is_zero()) throw InputError("context: q entries must be nonzero");
        }
        ctx.q.push_back(std::move(r));
    }
    ctx.tau.resize(ctx.n);
    for (int i = 0; i < ctx.n; ++i) ctx.tau[i] = i;
    if (j.contains("tau")) {
        const json& t = j["tau"];
        if (!t.is_array() || static_cast<int>(t.size()) != ctx.n) throw InputError("context: tau must list n entries");
        for (int i = 0; i < ctx.n; ++i) {
            if (!t[i].is_number_integer()) throw InputError("context: tau entries must be integers");
            int v = t[i].get<int>();
            if (v < 1 || v > ctx.n) throw InputError("context: tau entry outside 1..n");
            ctx.tau[i] = v - 1;
        }
    }
    ctx.D = get_int(j, "D", 6, false);
    if (ctx.D < 0) throw InputError("context: D must be nonnegative");
    try {
        ctx.validate();
    } catch (const ContextError& e) {
        throw InputError(std::string("context: ") + e.what());
    }
    return ctx;
}

std::vector<std::string> context_parameter_list(const json& j) {
    if (!j.contains("c")) return {};
    const json& c = j["c"];
    if (c.is_string()) return {c.get<std::string>()};
    if (!c.is_array()) throw InputError("context: 'c' must be \"sym\" or a list");
    std::vector<std::string> out;
    for (auto& v : c) {
        if (v.is_string()) out.push_back(v.get<std::string>());
        else if (v.is_number_integer()) out.push_back(std::to_string(v.get<long>()));
        else throw InputError("context: parameter entries must be strings or integers");
    }
    return out;
}

std::vector<Scalar> parse_parameters(const std::vector<std::string>& items, int n, int N) {
    std::vector<Scalar> c;
    if (items.size() == 1 && items[0] == "sym") {
        for (int i = 0; i < n; ++i) c.push_back(Scalar::var(i, n));
        return c;
    }
    if (static_cast<int>(items.size()) != n)
        throw InputError("expected " + std::to_string(n) + " parameters, got " + std::to_string(items.size()));
    for (int i = 0; i < n; ++i) {
        if (items[i] == "sym") {
            c.push_back(Scalar::var(i, n));
            continue;
        }
        c.push_back(Scalar(parse_entry(json(items[i]), N, "parameter c" + std::to_string(i + 1))));
    }
    return c;
}

bool is_numeric(const std::vector<Scalar>& c) {
    return std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_constant(); });
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        std::string item = s.substr(start, end - start);
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
        start = end + 1;
    }
    return out;
}

std::vector<FreeElement> parse_relations(const json& j, const Context& ctx) {
    const json* list = &j;
    if (j.is_object()) {
        if (!j.contains("relations")) throw InputError("relations: missing 'relations'");
        list = &j["relations"];
    }
    if (!list->is_array()) throw InputError("relations: expected an array");
    std::vector<FreeElement> out;
    for (auto& rel : *list) {
        const json* terms = &rel;
        if (rel.is_object()) {
            if (!rel.contains("terms")) throw InputError("relations: entry without 'terms'");
            terms = &rel["terms"];
        }
        if (!terms->is_array()) throw InputError("relations: 'terms' must be an array");
        FreeElement f(Side::F);
        for (auto& t : *terms) {
            if (!t.is_object() || !t.contains("word") || !t.contains("coef")) throw InputError("relations: term needs 'word' and 'coef'");
            f.add_term(parse_word(t["word"], ctx.n), Scalar(parse_entry(t["coef"], ctx.N, "relation coefficient")));
        }
        if (f.is_zero()) throw InputError("relations: relation is zero");
        if (!f.is_homogeneous(ctx.n)) throw InputError("relations: relation is not homogeneous");
        out.push_back(std::move(f));
    }
    return out;
}

json word_json(const Word& w) {
    json a = json::array();
    for (auto l : w) a.push_back(static_cast<int>(l) + 1);
    return a;
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (int x : w) a.push_back(x);
    return a;
}

json terms_json(const FreeElement& f) {
    json a = json::array();
    for (auto& [w, c] : f.terms()) a.push_back(json{{"word", word_json(w)}, {"coef", c.str()}});
    return a;
}

json star_terms_json(const StarElement& u) {
    json a = json::array();
    for (auto& [m, c] : u.terms()) a.push_back(json{{"K", weight_json(m.lam)}, {"word", word_json(m.y)}, {"coef", c.str()}});
    return a;
}

json scalar_json(const Scalar& s) {
    json a = json::array();
    for (auto& [e, c] : s.terms()) a.push_back(json{{"exponents", e}, {"coef", c.str()}});
    return a;
}

json matrix_json(const Matrix& m) {
    json a = json::array();
    for (auto& row : m) {
        json r = json::array();
        for (auto& x : row) r.push_back(x.str());
        a.push_back(r);
    }
    return a;
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"pairing",  "nichols-basis", "theta",  "coideal-conditions",
                                                "coideal-relations", "kmatrix", "verify", "examples"};
    return names;
}

void precompute_degrees(const NicholsAlgebra& alg, int D, int threads) {
    auto degs = degrees_up_to(alg.context().n, D);
    if (threads <= 1 || degs.size() < 2) return;
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t k = next++; k < degs.size(); k = next++) alg.degree_data(degs[k]);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

JobResult run_job(const JobSpec& spec) {
    const std::string& cmd = spec.command;
    if (std::find(command_names().begin(), command_names().end(), cmd) == command_names().end())
        throw InputError("unknown command '" + cmd + "'");
    if (cmd == "examples") {
        JobResult r;
        r.output = examples::run_all_json();
        r.exit_code = r.output["pass"].get<bool>() ? 0 : 1;
        return r;
    }
    Context ctx = spec.context;
    if (spec.degree) {
        if (*spec.degree < 0) throw InputError("--degree must be nonnegative");
        ctx.D = *spec.degree;
    }
    if (static_cast<int>(spec.c.size()) != ctx.n) throw InputError("parameter list does not match the rank");
    int threads = std::max(1, spec.threads);

    JobResult r;
    if (cmd == "pairing") r.output = cmd_pairing(ctx, threads);
    else if (cmd == "nichols-basis") r.output = cmd_basis(ctx, spec.relations, threads);
    else if (cmd == "theta") r.output = cmd_theta(ctx, threads);
    else if (cmd == "coideal-conditions") r = cmd_conditions(ctx, spec.c, spec.relations, threads);
    else if (cmd == "coideal-relations") r = cmd_relations(ctx, spec.c, spec.relations, threads);
    else {
        auto s = make_suite(ctx, spec.c, spec.relations);
        precompute_degrees(s->nichols(), s->bound() + 1, threads);
        r = cmd == "kmatrix" ? JobResult{cmd_kmatrix(*s), 0} : cmd_verify(*s);
    }
    r.output["command"] = cmd;
    r.output["context"] = json{{"n", ctx.n}, {"N", ctx.N}, {"D", ctx.D}};
    return r;
}

}  // namespace qsp

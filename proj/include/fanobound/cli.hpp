#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "fanobound/serialize.hpp"
#include "fanobound/version.hpp"

namespace fanobound::cli {

// Batch front end.  Every subcommand is a thin wrapper that builds one job
// object and hands it to run_job(); batch mode runs a whole instance file.
// Reports are canonical JSON (sorted keys, rationals as strings) so re-runs
// are byte-identical; --format text renders the same data for humans.

// Severity of a finished job: 0 ok, 1 usage error, 2 hypothesis error,
// 3 identity counterexample.  The process exit code is the most severe
// across jobs in the priority order 1 > 2 > 3 > 0.
struct job_outcome {
    json entry;
    int severity = 0;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline long long parse_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw usage_error("cannot parse " + what + " from '" + s + "'");
    }
}

inline std::vector<long long> parse_ll_list(const std::string& s, const std::string& what) {
    std::vector<long long> out;
    for (const std::string& piece : split(s, ',')) out.push_back(parse_ll(piece, what));
    return out;
}

inline long long get_int(const json& j, const char* key) {
    if (!j.contains(key)) throw usage_error(std::string("missing field '") + key + "'");
    if (!j[key].is_number_integer())
        throw usage_error(std::string("field '") + key + "' must be an integer");
    return j[key].get<long long>();
}

inline long long get_int_or(const json& j, const char* key, long long fallback) {
    return j.contains(key) ? get_int(j, key) : fallback;
}

inline rational get_rational(const json& j, const char* key) {
    if (!j.contains(key)) throw usage_error(std::string("missing field '") + key + "'");
    const json& v = j[key];
    if (v.is_number_integer()) return rational(v.get<long long>());
    if (v.is_string()) return rational::parse(v.get<std::string>());
    throw usage_error(std::string("field '") + key + "' must be an integer or a 'p/q' string");
}

inline std::vector<long long> get_weights(const json& j) {
    if (!j.contains("weights")) throw usage_error("missing field 'weights'");
    const json& w = j["weights"];
    if (!w.is_array() || w.empty()) throw usage_error("'weights' must be a non-empty array");
    std::vector<long long> out;
    for (const json& v : w) {
        if (!v.is_number_integer()) throw usage_error("'weights' entries must be integers");
        out.push_back(v.get<long long>());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Variety references: alias, weighted hypersurface, or inline invariants.

struct variety_ref {
    variety_invariants invariants;
    json echo;  // normalized form that resolves to the same invariants
    std::optional<weighted_hypersurface> hypersurface;
};

inline weighted_hypersurface resolve_alias(const std::string& name) {
    const auto wps_of_del_pezzo = [](int n, int d) {
        const del_pezzo_entry e = del_pezzo_lookup(n, d);
        if (!e.wps_model)
            throw usage_error("alias resolves to a del Pezzo row without a weighted "
                              "hypersurface model (d = " + std::to_string(d) + ")");
        return *e.wps_model;
    };
    if (name == "cubic3fold") return wps_of_del_pezzo(3, 3);
    if (name == "quintic3fold") return weighted_hypersurface::projective_hypersurface(3, 5);
    if (name == "quadric-surface") return weighted_hypersurface::projective_hypersurface(2, 2);
    if (name == "cubic-surface") return weighted_hypersurface::projective_hypersurface(2, 3);
    if (name == "quartic-surface") return weighted_hypersurface::projective_hypersurface(2, 4);
    if (name.rfind("delpezzo:", 0) == 0) {
        // "delpezzo:n=3,d=1"
        int n = -1, d = -1;
        for (const std::string& piece : split(name.substr(9), ',')) {
            const auto kv = split(piece, '=');
            if (kv.size() != 2) throw usage_error("bad alias '" + name + "'");
            const long long v = parse_ll(kv[1], "alias parameter");
            if (kv[0] == "n")
                n = static_cast<int>(v);
            else if (kv[0] == "d")
                d = static_cast<int>(v);
            else
                throw usage_error("bad alias parameter '" + kv[0] + "'");
        }
        if (n < 0 || d < 0) throw usage_error("alias '" + name + "' needs both n and d");
        return wps_of_del_pezzo(n, d);
    }
    if (name.rfind("wps:", 0) == 0) {
        // "wps:3,2,1,1,1:6"
        const auto parts = split(name.substr(4), ':');
        if (parts.size() != 2) throw usage_error("bad alias '" + name + "'");
        return weighted_hypersurface(parse_ll_list(parts[0], "weight"),
                                     parse_ll(parts[1], "degree"));
    }
    throw usage_error("unknown variety alias '" + name +
                      "'; known: cubic3fold, quintic3fold, quadric-surface, cubic-surface, "
                      "quartic-surface, delpezzo:n=N,d=D, wps:w0,w1,...:d");
}

inline variety_ref resolve_variety(const json& j) {
    if (j.is_string()) return resolve_variety(json{{"alias", j.get<std::string>()}});
    if (!j.is_object()) throw usage_error("variety reference must be a string or an object");
    if (j.contains("alias")) {
        const weighted_hypersurface x = resolve_alias(j["alias"].get<std::string>());
        return variety_ref{variety_invariants::from_hypersurface(x),
                           json{{"weights", x.weights()}, {"degree", x.degree()}}, x};
    }
    if (j.contains("weights")) {
        const weighted_hypersurface x(get_weights(j), get_int(j, "degree"));
        return variety_ref{variety_invariants::from_hypersurface(x),
                           json{{"weights", x.weights()}, {"degree", x.degree()}}, x};
    }
    if (j.contains("chern_numbers")) {
        const int n = static_cast<int>(get_int(j, "dimension"));
        const rational hp = get_rational(j, "h_power");
        std::vector<rational> cn;
        for (const json& v : j["chern_numbers"]) {
            if (v.is_number_integer())
                cn.push_back(rational(v.get<long long>()));
            else
                cn.push_back(rational::parse(v.get<std::string>()));
        }
        variety_invariants inv(n, hp, std::move(cn));
        json echo{{"dimension", inv.dimension},
                  {"h_power", inv.h_power.str()},
                  {"chern_numbers", json_of(inv.chern)}};
        return variety_ref{std::move(inv), std::move(echo), std::nullopt};
    }
    throw usage_error("variety reference needs 'alias', 'weights'+'degree', or "
                      "'dimension'+'h_power'+'chern_numbers'");
}

// Parses the CLI string form of a variety reference:
// alias | wps:...:d | delpezzo:n=..,d=.. | inv:n:h_power:c1,c2,...,cn
inline json variety_ref_json(const std::string& s) {
    if (s.rfind("inv:", 0) == 0) {
        const auto parts = split(s.substr(4), ':');
        if (parts.size() != 3)
            throw usage_error("bad inline invariants '" + s + "'; expected inv:n:h:c1,...,cn");
        json cn = json::array();
        for (const std::string& piece : split(parts[2], ','))
            cn.push_back(rational::parse(piece).str());
        // evaluated outside the braced list: expressions that throw inside a
        // json initializer list leak the already-built elements
        const long long dim = parse_ll(parts[0], "dimension");
        const std::string h_power = rational::parse(parts[1]).str();
        return json{{"dimension", dim}, {"h_power", h_power}, {"chern_numbers", cn}};
    }
    return json{{"alias", s}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Job execution

inline job_outcome run_job(std::size_t index, const std::string& kind, const json& input) {
    using namespace detail;
    json entry{{"index", index}, {"kind", kind}};
    json result;
    json echo;
    std::vector<std::string> rules;
    int severity = 0;

    if (kind == "chern") {
        const weighted_hypersurface x(get_weights(input), get_int(input, "degree"));
        const long long twist = get_int_or(input, "twist", 0);
        echo = json{{"weights", x.weights()}, {"degree", x.degree()}, {"twist", twist}};
        result["validation"] = json_of(validate(x, false));
        const chern_report rep = make_chern_report(x, twist);
        result["report"] = json_of(rep);
        rules = {"top-chern-residue-formula"};
        try {
            const rational closed = top_chern_residue(x, twist);
            result["residue_cross_check"] =
                json{{"value", closed.str()}, {"agrees", closed == rep.top_coefficient}};
        } catch (const hypothesis_error& e) {
            result["residue_cross_check"] = json{{"inapplicable", e.what()}};
        }
    } else if (kind == "positivity") {
        const weighted_hypersurface x(get_weights(input), get_int(input, "degree"));
        echo = json{{"weights", x.weights()}, {"degree", x.degree()}};
        result["validation"] = json_of(validate(x, true));
        result["positivity"] = json_of(wps_positivity(x));
        result["global_generation"] = to_string(gg_classify(x));
        rules = {"wps-positivity", "wps-global-generation"};
    } else if (kind == "bound") {
        const variety_ref x = resolve_variety(
            input.contains("x") ? input["x"] : throw usage_error("missing field 'x'"));
        const variety_ref y = resolve_variety(
            input.contains("y") ? input["y"] : throw usage_error("missing field 'y'"));
        const long long u = get_int(input, "u");
        bool gg = false;
        if (input.contains("gg_asserted") && input["gg_asserted"].is_boolean()) {
            gg = input["gg_asserted"].get<bool>();
        } else if (x.hypersurface && x.hypersurface->coprime_pair_weights() &&
                   x.hypersurface->well_formed()) {
            // auto-filled: the global-generation classification guarantees
            // generation away from finitely many points for this weight shape
            gg = true;
        }
        echo = json{{"x", x.echo}, {"y", y.echo}, {"u", u}, {"gg_asserted", gg}};
        result["x_invariants"] = json_of(x.invariants);
        result["y_invariants"] = json_of(y.invariants);
        result["bound"] = json_of(degree_bound(x.invariants, y.invariants, u, gg));
        rules = {"chern-degree-bound", "section-pullback-inequality"};
    } else if (kind == "quadric") {
        const long long q_exp = get_int_or(input, "q", 2);
        if (input.contains("pencil_lambdas")) {
            std::vector<rational> lambdas;
            for (const json& v : input["pencil_lambdas"]) {
                if (v.is_number_integer())
                    lambdas.push_back(rational(v.get<long long>()));
                else
                    lambdas.push_back(rational::parse(v.get<std::string>()));
            }
            const auto drop = static_cast<std::size_t>(get_int_or(input, "pencil_index", 0));
            json lam = json::array();
            for (const rational& l : lambdas) lam.push_back(l.str());
            echo = json{{"pencil_lambdas", lam}, {"pencil_index", drop}};
            const quadric_form proj = pencil_projection(lambdas, drop);
            result["projection"] = json_of(proj);
            result["full_rank"] = proj.rank() == proj.ambient_dim() + 1;
            rules = {"complete-intersection-two-quadrics-bounded"};
        } else if (input.contains("normal_form_k")) {
            const int k = static_cast<int>(get_int(input, "normal_form_k"));
            echo = json{{"normal_form_k", k}};
            result["substitution"] = json_of(diagonal_to_normal_form(k));
            rules = {"quadric-endo-rank"};
        } else {
            std::optional<quadric_form> q;
            if (input.contains("matrix")) {
                const json& rows = input["matrix"];
                std::vector<std::vector<rational>> m;
                for (const json& row : rows) {
                    std::vector<rational> r;
                    for (const json& v : row)
                        r.push_back(v.is_number_integer() ? rational(v.get<long long>())
                                                          : rational::parse(v.get<std::string>()));
                    m.push_back(std::move(r));
                }
                if (m.empty()) throw usage_error("'matrix' must be non-empty");
                q.emplace(static_cast<int>(m.size()) - 1, std::move(m));
                json mj = json::array();
                for (const auto& row : q->matrix()) {
                    json r = json::array();
                    for (const rational& v : row) r.push_back(v.str());
                    mj.push_back(r);
                }
                echo = json{{"matrix", mj}, {"q", q_exp}};
            } else {
                const int ambient = static_cast<int>(get_int(input, "ambient_dim"));
                const int k = static_cast<int>(get_int(input, "rank_k"));
                q.emplace(quadric_form::sum_of_squares(ambient, k));
                echo = json{{"ambient_dim", ambient}, {"rank_k", k}, {"q", q_exp}};
            }
            result["quadric"] = json_of(*q);
            result["verdict"] = json_of(decide(*q, q_exp));
            result["form_invariance"] = json_of(
                verify_invariance(q->form_polynomial(), monomial_map(q_exp, q->ambient_dim() + 1)));
            rules = {"quadric-endo-rank"};
        }
    } else if (kind == "classify") {
        if (!input.contains("subject") || !input["subject"].is_object())
            throw usage_error("classify job needs a 'subject' object");
        const json& sub = input["subject"];
        echo = json{{"subject", sub}};
        if (sub.contains("del_pezzo")) {
            const auto& p = sub["del_pezzo"];
            const int n = static_cast<int>(get_int(p, "n")), d = static_cast<int>(get_int(p, "d"));
            result["entry"] = json_of(del_pezzo_lookup(n, d));
            result["verdict"] = json_of(verdict_for(del_pezzo_subject{n, d}));
        } else if (sub.contains("del_pezzo_wps_consistency")) {
            const auto& p = sub["del_pezzo_wps_consistency"];
            result["consistency"] = json_of(del_pezzo_wps_consistency(
                static_cast<int>(get_int(p, "n")), static_cast<int>(get_int(p, "d"))));
        } else if (sub.contains("mukai")) {
            const int g = static_cast<int>(get_int(sub["mukai"], "genus"));
            result["entry"] = json_of(mukai_lookup(g));
            result["verdict"] = json_of(verdict_for(mukai_subject{g}));
        } else if (sub.contains("quadric")) {
            const auto& p = sub["quadric"];
            result["verdict"] = json_of(verdict_for(quadric_subject{
                static_cast<int>(get_int(p, "ambient_dim")),
                static_cast<int>(get_int(p, "rank_k"))}));
        } else if (sub.contains("fourfold")) {
            const auto& p = sub["fourfold"];
            fourfold_subject f{static_cast<int>(get_int(p, "index")), std::nullopt};
            if (p.contains("vmrt_dim")) f.vmrt_dim = static_cast<int>(get_int(p, "vmrt_dim"));
            result["verdict"] = json_of(verdict_for(f));
        } else if (sub.contains("fano_index")) {
            const auto& p = sub["fano_index"];
            result["verdict"] = json_of(verdict_for(fano_index_subject{
                static_cast<int>(get_int(p, "n")), static_cast<int>(get_int(p, "index")),
                static_cast<int>(get_int(p, "rho"))}));
        } else if (sub.contains("splitting_types")) {
            result["data"] = json_of(
                splitting_types_del_pezzo(static_cast<int>(get_int(sub["splitting_types"], "n"))));
        } else if (sub.contains("index_facts")) {
            const auto& p = sub["index_facts"];
            result["data"] = json_of(index_facts(static_cast<int>(get_int(p, "n")),
                                                 static_cast<int>(get_int(p, "r"))));
        } else if (sub.contains("standard_p")) {
            const auto& p = sub["standard_p"];
            std::optional<long long> dim;
            if (p.contains("dimension")) dim = get_int(p, "dimension");
            result["data"] =
                json_of(standard_p(get_int(p, "index"), get_int(p, "h_dot"), dim));
        } else if (sub.contains("ramification")) {
            const auto& p = sub["ramification"];
            result["data"] =
                json_of(ramification_contradiction(get_int(p, "index"), get_int(p, "lambda")));
        } else {
            throw usage_error(
                "unsupported classify subject; supported: del_pezzo, "
                "del_pezzo_wps_consistency, mukai, quadric, fourfold, fano_index, "
                "splitting_types, index_facts, standard_p, ramification");
        }
        if (result.contains("verdict")) rules = {result["verdict"]["rule"].get<std::string>()};
        if (result.contains("data") && result["data"].contains("rule"))
            rules = {result["data"]["rule"].get<std::string>()};
    } else if (kind == "identity-check") {
        grid_options opt;
        opt.max_a0 = static_cast<int>(get_int_or(input, "max_a0", opt.max_a0));
        opt.max_n = static_cast<int>(get_int_or(input, "max_n", opt.max_n));
        opt.min_d = static_cast<int>(get_int_or(input, "min_d", opt.min_d));
        opt.max_d = static_cast<int>(get_int_or(input, "max_d", opt.max_d));
        opt.max_twist = static_cast<int>(get_int_or(input, "max_twist", opt.max_twist));
        if (input.contains("include_sum_twist"))
            opt.include_sum_twist = input["include_sum_twist"].get<bool>();
        if (input.contains("run_g")) opt.run_g = input["run_g"].get<bool>();
        opt.g_max_a = static_cast<int>(get_int_or(input, "g_max_a", opt.g_max_a));
        opt.g_max_n = static_cast<int>(get_int_or(input, "g_max_n", opt.g_max_n));
        opt.g_max_x = static_cast<int>(get_int_or(input, "g_max_x", opt.g_max_x));
        echo = json{{"max_a0", opt.max_a0},
                    {"max_n", opt.max_n},
                    {"min_d", opt.min_d},
                    {"max_d", opt.max_d},
                    {"max_twist", opt.max_twist},
                    {"include_sum_twist", opt.include_sum_twist},
                    {"run_g", opt.run_g},
                    {"g_max_a", opt.g_max_a},
                    {"g_max_n", opt.g_max_n},
                    {"g_max_x", opt.g_max_x}};
        const identity_summary summary = run_identity_suite(opt);
        result["summary"] = json_of(summary);
        rules = {"top-chern-residue-formula", "residue-sum-identity", "wps-positivity"};
        if (!summary.all_passed()) severity = 3;
    } else {
        throw usage_error("unknown job kind '" + kind + "'");
    }

    entry["input"] = std::move(echo);
    entry["result"] = std::move(result);
    entry["provenance"] =
        json{{"engine", "fanobound"}, {"version", version_string}, {"rules", rules}};
    return job_outcome{std::move(entry), severity};
}

inline job_outcome run_job_capturing(std::size_t index, const std::string& kind,
                                     const json& input) {
    try {
        return run_job(index, kind, input);
    } catch (const hypothesis_error& e) {
        json entry{{"index", index},
                   {"kind", kind},
                   {"input", input},
                   {"error", json{{"category", "hypothesis"}, {"message", e.what()}}}};
        return job_outcome{std::move(entry), 2};
    } catch (const std::exception& e) {
        json entry{{"index", index},
                   {"kind", kind},
                   {"input", input},
                   {"error", json{{"category", "usage"}, {"message", e.what()}}}};
        return job_outcome{std::move(entry), 1};
    }
}

// ---------------------------------------------------------------------------
// Report rendering and output

namespace detail {

inline void render_job_text(const json& job, std::ostream& os) {
    os << "job " << job["index"].get<std::size_t>() << " (" << job["kind"].get<std::string>()
       << ")\n";
    if (job.contains("error")) {
        os << "  error [" << job["error"]["category"].get<std::string>()
           << "]: " << job["error"]["message"].get<std::string>() << "\n";
        return;
    }
    const json& r = job["result"];
    const std::string kind = job["kind"].get<std::string>();
    if (kind == "chern") {
        const json& rep = r["report"];
        os << "  c(Omega_X(" << rep["twist"] << ")) = " << rep["series"]["text"].get<std::string>()
           << "\n  top coefficient " << rep["top_coefficient"].get<std::string>() << ", H^n = "
           << rep["h_power"].get<std::string>() << ", top Chern number "
           << rep["top_number"].get<std::string>() << "\n";
    } else if (kind == "positivity") {
        os << "  margin " << r["positivity"]["margin"].get<std::string>() << " (twist "
           << r["positivity"]["twist"] << "), holds: "
           << (r["positivity"]["holds"].get<bool>() ? "yes" : "no") << ", "
           << r["global_generation"].get<std::string>() << "\n";
    } else if (kind == "bound") {
        const json& b = r["bound"];
        os << "  status " << b["status"].get<std::string>();
        if (b.contains("m_max"))
            os << ", m_max " << b["m_max"] << ", degree bound N = "
               << b["degree_bound"].get<std::string>();
        os << "\n  feasible m: " << b["feasible_m"].dump() << " (scan cap " << b["scan_cap"]
           << ")\n";
    } else if (kind == "quadric") {
        if (r.contains("verdict")) {
            const json& v = r["verdict"];
            os << "  rank parameter k = " << v["rank_k"] << ", admits endomorphism: "
               << (v["admits"].get<bool>() ? "yes" : "no") << "\n";
            if (v.contains("witness"))
                os << "  witness " << v["witness"]["normal_form"].get<std::string>() << " under "
                   << v["witness"]["map"].get<std::string>() << ", quotient "
                   << v["witness"]["quotient"].get<std::string>() << "\n";
        } else if (r.contains("projection")) {
            os << "  projected quadric rank " << r["projection"]["rank"] << ", form "
               << r["projection"]["form"].get<std::string>() << "\n";
        } else if (r.contains("substitution")) {
            os << "  target " << r["substitution"]["target"].get<std::string>() << ", verified: "
               << (r["substitution"]["verified"].get<bool>() ? "yes" : "no") << "\n";
            for (const json& rule : r["substitution"]["rules"])
                os << "    " << rule.get<std::string>() << "\n";
        }
    } else if (kind == "classify") {
        if (r.contains("verdict")) {
            const json& v = r["verdict"];
            os << "  " << v["subject"].get<std::string>() << ": " << v["status"].get<std::string>()
               << " [" << v["rule"].get<std::string>() << "]\n";
        }
        if (r.contains("consistency"))
            os << "  margin " << r["consistency"]["positivity"]["margin"].get<std::string>()
               << ", holds: "
               << (r["consistency"]["positivity"]["holds"].get<bool>() ? "yes" : "no") << "\n";
        if (r.contains("data")) os << "  " << r["data"].dump() << "\n";
    } else if (kind == "identity-check") {
        const json& s = r["summary"];
        os << "  failures " << s["total_failures"] << ", oracle checked " << s["oracle_checked"]
           << " (skipped " << s["oracle_skipped_formula_inapplicable"] << "), g points "
           << s["g_points"] << "\n";
        for (const json& c : s["counterexamples"])
            os << "    counterexample: " << c.get<std::string>() << "\n";
    }
}

inline void write_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw usage_error("cannot open output file '" + path + "'");
        os << content;
        if (!os.flush()) throw usage_error("failed writing output file '" + path + "'");
    }
    fs::rename(tmp, target);
}

inline int env_parallelism() {
    const char* v = std::getenv("FANOBOUND_PARALLELISM");
    if (!v) return 1;
    try {
        const int n = std::stoi(v);
        return n >= 1 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace detail

/// Runs a list of jobs (possibly concurrently; output order always matches
/// input order) and assembles the report envelope.
inline std::pair<json, int> run_jobs(const std::vector<std::pair<std::string, json>>& jobs) {
    std::vector<job_outcome> outcomes(jobs.size(), job_outcome{});
    const int threads =
        std::max(1, std::min(detail::env_parallelism(), static_cast<int>(jobs.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            outcomes[i] = run_job_capturing(i, jobs[i].first, jobs[i].second);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < jobs.size();
                     i += static_cast<std::size_t>(threads))
                    outcomes[i] = run_job_capturing(i, jobs[i].first, jobs[i].second);
            });
        }
        for (std::thread& th : pool) th.join();
    }
    json report{{"version", "1"},
                {"engine", json{{"name", "fanobound"}, {"version", version_string}}}};
    json list = json::array();
    int exit_code = 0;
    for (const job_outcome& o : outcomes) {
        list.push_back(o.entry);
        // priority order: usage (1) > hypothesis (2) > counterexample (3)
        if (o.severity == 0) continue;
        if (exit_code == 0 || o.severity < exit_code) exit_code = o.severity;
    }
    report["jobs"] = std::move(list);
    return {std::move(report), exit_code};
}

inline void emit_report(const json& report, const std::string& format,
                        const std::string& output_path, std::ostream& out) {
    std::string text;
    if (format == "json") {
        text = report.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const json& job : report["jobs"]) detail::render_job_text(job, os);
        text = os.str();
    }
    if (output_path.empty())
        out << text;
    else
        detail::write_atomically(output_path, text);
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic toolkit: Chern classes of twisted cotangent sheaves of "
                 "weighted hypersurfaces, degree bounds for finite morphisms, and quadric "
                 "endomorphism decisions"};
    app.fallthrough();
    std::string format = "json", output_path;
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--output", output_path, "Write the report to a file (atomically)");

    std::string weights_str, x_ref, y_ref, matrix_str, lambdas_str;
    long long degree = 0, twist = 0, u = 1, q_exp = 2;
    long long ambient_dim = -1, rank_k_val = -1, normal_form_k = -1, drop_index = 0;
    std::string gg_mode = "auto";
    std::string del_pezzo_s, wps_cons_s, quadric_s, fourfold_s, fano_s, index_facts_s,
        standard_p_s, ramification_s;
    long long mukai_g = -1, splitting_n = -1;
    grid_options grid;
    std::string instance_path;

    CLI::App* c_chern = app.add_subcommand("chern", "Total Chern class of Omega_X(a)");
    c_chern->add_option("--weights", weights_str, "Comma-separated weights")->required();
    c_chern->add_option("--degree", degree, "Hypersurface degree")->required();
    c_chern->add_option("--twist", twist, "Twist a");

    CLI::App* c_pos = app.add_subcommand("positivity", "Positivity margin at twist a_0 + a_1");
    c_pos->add_option("--weights", weights_str, "Comma-separated weights")->required();
    c_pos->add_option("--degree", degree, "Hypersurface degree")->required();

    CLI::App* c_bound = app.add_subcommand("bound", "Degree bound for finite morphisms Y -> X");
    c_bound->add_option("--x", x_ref, "Target variety (alias, wps:...:d, delpezzo:n=..,d=.., "
                                      "or inv:n:h:c1,...,cn)")
        ->required();
    c_bound->add_option("--y", y_ref, "Source variety (same forms)")->required();
    c_bound->add_option("--u", u, "Twist u")->required();
    c_bound->add_option("--gg-asserted", gg_mode,
                        "Global generation of Omega_X(u H_X) away from finitely many points")
        ->check(CLI::IsMember({"true", "false", "auto"}))
        ->capture_default_str();

    CLI::App* c_quad = app.add_subcommand("quadric", "Quadric endomorphism decisions");
    c_quad->add_option("--ambient-dim", ambient_dim, "Ambient projective dimension n");
    c_quad->add_option("--rank-k", rank_k_val, "Rank parameter k (form x_0^2+...+x_k^2)");
    c_quad->add_option("--matrix", matrix_str,
                       "Symmetric matrix, rows separated by ';', entries by ','");
    c_quad->add_option("--q", q_exp, "Power-map exponent")->capture_default_str();
    c_quad->add_option("--lambdas", lambdas_str, "Pencil parameters (pairwise distinct)");
    c_quad->add_option("--drop-index", drop_index, "Coordinate dropped by the pencil projection")
        ->capture_default_str();
    c_quad->add_option("--normal-form", normal_form_k,
                       "Emit the Gaussian-rational substitution for k in {1,2,3}");

    CLI::App* c_cls = app.add_subcommand("classify", "Classification tables and verdicts");
    c_cls->add_option("--del-pezzo", del_pezzo_s, "n,d");
    c_cls->add_option("--wps-consistency", wps_cons_s, "n,d (d in {1,2,3})");
    c_cls->add_option("--mukai", mukai_g, "Genus g");
    c_cls->add_option("--quadric", quadric_s, "ambient_dim,k");
    c_cls->add_option("--fourfold", fourfold_s, "index[,vmrt_dim]");
    c_cls->add_option("--fano", fano_s, "n,index,rho");
    c_cls->add_option("--splitting-types", splitting_n, "Dimension n");
    c_cls->add_option("--index-facts", index_facts_s, "n,r");
    c_cls->add_option("--standard-p", standard_p_s, "index,h_dot[,dimension]");
    c_cls->add_option("--ramification", ramification_s, "index,lambda");

    bool no_sum_twist = false, skip_g = false;
    CLI::App* c_chk = app.add_subcommand("check-identities",
                                         "Exhaustive grid check of the engine identities");
    c_chk->add_option("--max-a0", grid.max_a0)->capture_default_str();
    c_chk->add_option("--max-n", grid.max_n)->capture_default_str();
    c_chk->add_option("--min-d", grid.min_d)->capture_default_str();
    c_chk->add_option("--max-d", grid.max_d)->capture_default_str();
    c_chk->add_option("--max-twist", grid.max_twist)->capture_default_str();
    c_chk->add_flag("--no-sum-twist", no_sum_twist, "Do not add a_0 + a_1 to the twist set");
    c_chk->add_flag("--skip-g", skip_g, "Skip the g-function grid");
    c_chk->add_option("--g-max-a", grid.g_max_a)->capture_default_str();
    c_chk->add_option("--g-max-n", grid.g_max_n)->capture_default_str();
    c_chk->add_option("--g-max-x", grid.g_max_x)->capture_default_str();

    CLI::App* c_batch = app.add_subcommand("batch", "Run an instance file of jobs");
    c_batch->add_option("--input", instance_path, "Instance file (JSON)")->required();

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.push_back("fanobound");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        std::vector<std::pair<std::string, json>> jobs;
        // any expression that can throw is evaluated before entering a json
        // braced list (a throw inside one leaks the already-built elements)
        if (c_chern->parsed()) {
            const auto weights = detail::parse_ll_list(weights_str, "weight");
            jobs.emplace_back("chern",
                              json{{"weights", weights}, {"degree", degree}, {"twist", twist}});
        } else if (c_pos->parsed()) {
            const auto weights = detail::parse_ll_list(weights_str, "weight");
            jobs.emplace_back("positivity", json{{"weights", weights}, {"degree", degree}});
        } else if (c_bound->parsed()) {
            const json x_json = detail::variety_ref_json(x_ref);
            const json y_json = detail::variety_ref_json(y_ref);
            json input{{"x", x_json}, {"y", y_json}, {"u", u}};
            if (gg_mode != "auto") input["gg_asserted"] = gg_mode == "true";
            jobs.emplace_back("bound", std::move(input));
        } else if (c_quad->parsed()) {
            json input;
            if (!lambdas_str.empty()) {
                json lam = json::array();
                for (const std::string& piece : detail::split(lambdas_str, ','))
                    lam.push_back(rational::parse(piece).str());
                input = json{{"pencil_lambdas", lam}, {"pencil_index", drop_index}};
            } else if (normal_form_k >= 0) {
                input = json{{"normal_form_k", normal_form_k}};
            } else if (!matrix_str.empty()) {
                json rows = json::array();
                for (const std::string& row : detail::split(matrix_str, ';')) {
                    json r = json::array();
                    for (const std::string& piece : detail::split(row, ','))
                        r.push_back(rational::parse(piece).str());
                    rows.push_back(r);
                }
                input = json{{"matrix", rows}, {"q", q_exp}};
            } else if (ambient_dim >= 0 && rank_k_val >= 0) {
                input = json{{"ambient_dim", ambient_dim}, {"rank_k", rank_k_val}, {"q", q_exp}};
            } else {
                throw usage_error("quadric: give --ambient-dim with --rank-k, or --matrix, or "
                                  "--lambdas, or --normal-form");
            }
            jobs.emplace_back("quadric", std::move(input));
        } else if (c_cls->parsed()) {
            json subject;
            const auto ints = [&](const std::string& s) {
                return detail::parse_ll_list(s, "classify parameter");
            };
            if (!del_pezzo_s.empty()) {
                const auto v = ints(del_pezzo_s);
                if (v.size() != 2) throw usage_error("--del-pezzo expects n,d");
                subject["del_pezzo"] = json{{"n", v[0]}, {"d", v[1]}};
            } else if (!wps_cons_s.empty()) {
                const auto v = ints(wps_cons_s);
                if (v.size() != 2) throw usage_error("--wps-consistency expects n,d");
                subject["del_pezzo_wps_consistency"] = json{{"n", v[0]}, {"d", v[1]}};
            } else if (mukai_g >= 0) {
                subject["mukai"] = json{{"genus", mukai_g}};
            } else if (!quadric_s.empty()) {
                const auto v = ints(quadric_s);
                if (v.size() != 2) throw usage_error("--quadric expects ambient_dim,k");
                subject["quadric"] = json{{"ambient_dim", v[0]}, {"rank_k", v[1]}};
            } else if (!fourfold_s.empty()) {
                const auto v = ints(fourfold_s);
                if (v.empty() || v.size() > 2)
                    throw usage_error("--fourfold expects index[,vmrt_dim]");
                subject["fourfold"] = json{{"index", v[0]}};
                if (v.size() == 2) subject["fourfold"]["vmrt_dim"] = v[1];
            } else if (!fano_s.empty()) {
                const auto v = ints(fano_s);
                if (v.size() != 3) throw usage_error("--fano expects n,index,rho");
                subject["fano_index"] = json{{"n", v[0]}, {"index", v[1]}, {"rho", v[2]}};
            } else if (splitting_n >= 0) {
                subject["splitting_types"] = json{{"n", splitting_n}};
            } else if (!index_facts_s.empty()) {
                const auto v = ints(index_facts_s);
                if (v.size() != 2) throw usage_error("--index-facts expects n,r");
                subject["index_facts"] = json{{"n", v[0]}, {"r", v[1]}};
            } else if (!standard_p_s.empty()) {
                const auto v = ints(standard_p_s);
                if (v.size() < 2 || v.size() > 3)
                    throw usage_error("--standard-p expects index,h_dot[,dimension]");
                subject["standard_p"] = json{{"index", v[0]}, {"h_dot", v[1]}};
                if (v.size() == 3) subject["standard_p"]["dimension"] = v[2];
            } else if (!ramification_s.empty()) {
                const auto v = ints(ramification_s);
                if (v.size() != 2) throw usage_error("--ramification expects index,lambda");
                subject["ramification"] = json{{"index", v[0]}, {"lambda", v[1]}};
            } else {
                throw usage_error("classify: give exactly one subject option (see --help)");
            }
            jobs.emplace_back("classify", json{{"subject", subject}});
        } else if (c_chk->parsed()) {
            grid.include_sum_twist = !no_sum_twist;
            grid.run_g = !skip_g;
            jobs.emplace_back("identity-check", json{{"max_a0", grid.max_a0},
                                                     {"max_n", grid.max_n},
                                                     {"min_d", grid.min_d},
                                                     {"max_d", grid.max_d},
                                                     {"max_twist", grid.max_twist},
                                                     {"include_sum_twist", grid.include_sum_twist},
                                                     {"run_g", grid.run_g},
                                                     {"g_max_a", grid.g_max_a},
                                                     {"g_max_n", grid.g_max_n},
                                                     {"g_max_x", grid.g_max_x}});
        } else if (c_batch->parsed()) {
            std::ifstream is(instance_path);
            if (!is) throw usage_error("cannot open instance file '" + instance_path + "'");
            json instance;
            try {
                is >> instance;
            } catch (const std::exception& e) {
                throw usage_error("instance file is not valid JSON: " + std::string(e.what()));
            }
            if (!instance.is_object() || !instance.contains("version"))
                throw usage_error("instance file needs a 'version' tag");
            if (instance["version"] != "1")
                throw usage_error("unsupported instance file version");
            if (!instance.contains("jobs") || !instance["jobs"].is_array())
                throw usage_error("instance file needs a 'jobs' array");
            static constexpr const char* known[] = {"chern",   "positivity", "bound",
                                                    "quadric", "classify",   "identity-check"};
            std::size_t idx = 0;
            for (const json& job : instance["jobs"]) {
                if (!job.is_object() || !job.contains("kind") || !job["kind"].is_string())
                    throw usage_error("job " + std::to_string(idx) + ": missing 'kind'");
                const std::string kind = job["kind"].get<std::string>();
                if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
                        return kind == k;
                    }) == std::end(known))
                    throw usage_error("job " + std::to_string(idx) + ": unknown kind '" + kind +
                                      "'");
                json input = job;
                input.erase("kind");
                jobs.emplace_back(kind, std::move(input));
                ++idx;
            }
        }

        auto [report, exit_code] = run_jobs(jobs);
        emit_report(report, format, output_path, out);
        if (exit_code != 0) {
            for (const json& job : report["jobs"])
                if (job.contains("error"))
                    err << "job " << job["index"] << " ["
                        << job["error"]["category"].get<std::string>()
                        << "]: " << job["error"]["message"].get<std::string>() << "\n";
        }
        return exit_code;
    } catch (const hypothesis_error& e) {
        err << "error [hypothesis]: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fanobound::cli

// nok: verify / table / selftest / bench front-end.
// Exit codes: 0 all checks exact-match, 1 mismatch (or a check could not be
// certified), 2 usage error.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kernels.hpp"
#include "nok/acceptance.hpp"
#include "nok/adaptive.hpp"
#include "nok/identities.hpp"
#include "nok/sweeps.hpp"

namespace {

using nok::Caps;
using nok::Report;
using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string identity;
    std::optional<int> N, D, M, s_deg, max_size, samples;
    std::optional<std::string> mu, nu;
    std::string output = "text";
    std::uint64_t seed = 0;
    bool no_timing = false;
    int reps = 1;
};

const std::vector<std::string> kIdentities = {"main",     "main2",           "cor_main",    "cor_main2",        "no_classic",
                                              "conj_no",  "lemma_inf_finite", "fock_lemmas", "vertex_symmetries"};

int need(const std::optional<int>& v, const char* flag, const RunConfig& cfg) {
    if (!v) throw UsageError(std::string(flag) + " is required for --identity " + cfg.identity);
    return *v;
}

void need_min(int v, int lo, const char* flag) {
    if (v < lo) throw UsageError(std::string(flag) + " must be >= " + std::to_string(lo));
}

nok::Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "0" || text == "empty") return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad partition '" + text + "' (expected e.g. 2,1)");
        }
    }
    try {
        return nok::Partition(parts);
    } catch (const std::invalid_argument&) {
        throw UsageError("bad partition '" + text + "' (parts must be positive and weakly decreasing)");
    }
}

std::optional<nok::Sample> sample_of(const RunConfig& cfg) {
    if (!cfg.samples) return std::nullopt;
    need_min(*cfg.samples, 1, "--samples");
    return nok::Sample{*cfg.samples, cfg.seed};
}

Caps q_caps(const RunConfig& cfg) {
    Caps c{need(cfg.N, "--N", cfg), need(cfg.D, "--D", cfg), need(cfg.M, "--M", cfg), 0};
    need_min(c.N, 1, "--N");
    need_min(c.D, 0, "--D");
    need_min(c.M, 0, "--M");
    return c;
}

Caps t_caps(const RunConfig& cfg, bool single) {
    Caps c{single ? cfg.N.value_or(1) : need(cfg.N, "--N", cfg), 0, 0, need(cfg.s_deg, "--s-deg", cfg)};
    need_min(c.N, 1, "--N");
    if (single && c.N != 1) throw UsageError("--identity " + cfg.identity + " is an N = 1 identity");
    need_min(c.s_deg, 0, "--s-deg");
    return c;
}

std::vector<Report> verify(const RunConfig& cfg) {
    const std::string& id = cfg.identity;
    std::vector<Report> out;
    if (id == "main" || id == "main2") {
        const auto f = id == "main" ? nok::Family::Z : nok::Family::ZTilde;
        const Caps c = q_caps(cfg);
        out.push_back(nok::three_way_check(f, c));
        out.push_back(nok::theorem_check(f, c));
        out.push_back(nok::ring_membership_check(f, c));
    } else if (id == "cor_main" || id == "cor_main2") {
        out.push_back(nok::corollary_check(id == "cor_main" ? nok::Corollary::CorMain : nok::Corollary::CorMain2,
                                           t_caps(cfg, false)));
    } else if (id == "no_classic") {
        const Caps c = t_caps(cfg, true);
        out.push_back(nok::corollary_check(nok::Corollary::NoClassic, c));
        out.push_back(nok::no_classic_t1_check(c.s_deg));
    } else if (id == "conj_no") {
        out.push_back(nok::corollary_check(nok::Corollary::ConjNo, t_caps(cfg, true)));
    } else if (id == "lemma_inf_finite") {
        const int z_deg = need(cfg.D, "--D", cfg), M = need(cfg.M, "--M", cfg);
        need_min(z_deg, 0, "--D");
        need_min(M, 0, "--M");
        if (cfg.mu || cfg.nu) {
            if (!cfg.mu || !cfg.nu) throw UsageError("--mu and --nu go together");
            out.push_back(nok::lemma_inf_finite_check(parse_partition(*cfg.mu), parse_partition(*cfg.nu), z_deg, M));
        } else {
            const int ms = need(cfg.max_size, "--max-size (or --mu/--nu)", cfg);
            need_min(ms, 0, "--max-size");
            out.push_back(nok::lemma_inf_finite_sweep(ms, z_deg, M, nok::Exec::Parallel, sample_of(cfg)));
        }
    } else if (id == "fock_lemmas") {
        const Caps c = q_caps(cfg);  // N = largest L
        for (int L = 1; L <= c.N; ++L) out.push_back(nok::fock_lemma_sweep(L, nok::Pairing::Identity, c.D, c.M));
        for (int L = 1; L <= c.N; ++L) out.push_back(nok::fock_lemma_sweep(L, nok::Pairing::Conjugate, c.D, c.M));
        out.push_back(nok::commutation_sweep(cfg.max_size.value_or(c.D), c.M));
    } else if (id == "vertex_symmetries") {
        const int ms = need(cfg.max_size, "--max-size", cfg), M = need(cfg.M, "--M", cfg);
        need_min(ms, 0, "--max-size");
        need_min(M, 0, "--M");
        out.push_back(nok::vertex_symmetry_sweep(false, ms, M, nok::Exec::Parallel, sample_of(cfg)));
        out.push_back(nok::vertex_symmetry_sweep(true, ms, M, nok::Exec::Parallel, sample_of(cfg)));
    } else {
        throw UsageError("unknown identity " + id);
    }
    if (cfg.no_timing)
        for (auto& r : out) r.wall_ms = 0;
    return out;
}

Json to_json(const Report& r) {
    Json j;
    j["identity"] = r.identity;
    j["caps"] = {{"N", r.caps.N}, {"D", r.caps.D}, {"M", r.caps.M}, {"s_deg", r.caps.s_deg}};
    j["status"] = r.status();
    if (r.witness) {
        Json w;
        w["monomial"] = r.witness->monomial;
        if (r.witness->tau_exponent) w["tau_exponent"] = *r.witness->tau_exponent;
        w["lhs"] = r.witness->lhs;
        w["rhs"] = r.witness->rhs;
        w["stage"] = r.witness->stage;
        j["witness"] = w;
    }
    j["certified_tau_window"] = r.certified_window ? Json(*r.certified_window) : Json(nullptr);
    j["working_cap"] = r.working_cap;
    j["wall_ms"] = r.wall_ms;
    j["notes"] = r.notes;
    return j;
}

void print_text(const Report& r, bool timing) {
    std::printf("[%s] %s  N=%d D=%d M=%d s_deg=%d", r.status().c_str(), r.identity.c_str(), r.caps.N, r.caps.D,
                r.caps.M, r.caps.s_deg);
    if (r.certified_window) std::printf("  certified through tau^%d (working cap %d)", *r.certified_window, r.working_cap);
    if (timing) std::printf("  %.1f ms", r.wall_ms);
    std::printf("\n");
    for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
    if (r.witness) {
        std::printf("    witness (%s): %s", r.witness->stage.c_str(), r.witness->monomial.c_str());
        if (r.witness->tau_exponent) std::printf(" at tau^%d", *r.witness->tau_exponent);
        std::printf(": lhs %s, rhs %s\n", r.witness->lhs.c_str(), r.witness->rhs.c_str());
    }
}

// ---- table ----

Json tau_terms(const nok::LaurentSeries& s, int upto) {
    Json a = Json::array();
    for (const auto& [e, c] : s.terms())
        if (e <= upto) a.push_back(Json::array({e, nok::to_fraction_string(c)}));
    return a;
}

std::string tau_text(const nok::LaurentSeries& s, int upto) {
    std::string out;
    for (const auto& [e, c] : s.terms()) {
        if (e > upto) break;
        out += (out.empty() ? "" : " + ") + std::string("(") + nok::to_fraction_string(c) + ")*tau^" + std::to_string(e);
    }
    return (out.empty() ? "0" : out) + " + O(tau^" + std::to_string(upto + 1) + ")";
}

// Exponent vectors of total degree <= d, graded then lexicographic.
std::vector<nok::Exponents> graded(int nv, int d) {
    std::vector<nok::Exponents> out;
    nok::Exponents e(static_cast<std::size_t>(nv), 0);
    for (int total = 0; total <= d; ++total) {
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == nv - 1) {
                e[static_cast<std::size_t>(pos)] = left;
                out.push_back(e);
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[static_cast<std::size_t>(pos)] = k;
                self(self, pos + 1, left - k);
            }
        };
        rec(rec, 0, total);
    }
    return out;
}

int table(const RunConfig& cfg) {
    const std::string& id = cfg.identity;
    const bool json = cfg.output == "json";
    Json rows = Json::array();
    bool all_equal = true;
    if (id == "cor_main" || id == "cor_main2" || id == "no_classic" || id == "conj_no") {
        const bool single = id == "no_classic" || id == "conj_no";
        const Caps c = t_caps(cfg, single);
        const auto which = id == "cor_main"    ? nok::Corollary::CorMain
                           : id == "cor_main2" ? nok::Corollary::CorMain2
                           : id == "no_classic" ? nok::Corollary::NoClassic
                                                : nok::Corollary::ConjNo;
        const auto lhs = nok::corollary_lhs(which, c.N, c.s_deg);
        const auto rhs = nok::corollary_rhs(which, c.N, c.s_deg);
        for (const auto& e : graded(c.N, c.s_deg)) {
            const auto l = lhs.coeff(e), r = rhs.coeff(e);
            all_equal = all_equal && l == r;
            if (json) {
                Json row;
                row["s_power"] = c.N == 1 ? Json(e[0]) : Json(e);
                row["lhs_tpoly"] = l.to_string();
                row["rhs_tpoly"] = r.to_string();
                rows.push_back(row);
            } else {
                std::printf("%-16s lhs: %s\n%-16s rhs: %s\n", nok::Monomial{1, e}.to_string(*lhs.vars()).c_str(),
                            l.to_string().c_str(), "", r.to_string().c_str());
            }
        }
    } else if (id == "main" || id == "main2") {
        const auto f = id == "main" ? nok::Family::Z : nok::Family::ZTilde;
        const Caps c = q_caps(cfg);
        std::optional<nok::QSeries> lhs, rhs;
        nok::with_certified_window(c.M, [&](int W) {
            lhs = nok::partition_sum(f, c, W, false);
            rhs = nok::partition_prod(f, c, W, false);
            return std::min(nok::certified_window(*lhs), nok::certified_window(*rhs));
        });
        for (const auto& e : graded(2 * c.N, c.D)) {
            const auto l = lhs->coeff(e), r = rhs->coeff(e);
            all_equal = all_equal && nok::eq_to_order(l, r, c.M).equal;
            const std::string mono = nok::Monomial{1, e}.to_string(*lhs->vars());
            if (json) {
                Json row;
                row["monomial"] = mono;
                row["exponents"] = e;
                row["lhs"] = tau_terms(l, c.M);
                row["rhs"] = tau_terms(r, c.M);
                rows.push_back(row);
            } else {
                std::printf("%-16s lhs: %s\n%-16s rhs: %s\n", mono.c_str(), tau_text(l, c.M).c_str(), "",
                            tau_text(r, c.M).c_str());
            }
        }
    } else {
        throw UsageError("table supports main, main2, cor_main, cor_main2, no_classic and conj_no");
    }
    if (json) std::cout << rows.dump(2) << "\n";
    return all_equal ? 0 : 1;
}

int selftest(const RunConfig& cfg) {
    const bool json = cfg.output == "json";
    Json out = Json::array();
    int failed = 0;
    nok::run_acceptance(nok::Exec::Parallel, [&](const nok::CriterionResult& r) {
        if (!r.pass) ++failed;
        const double ms = cfg.no_timing ? 0.0 : r.wall_ms;
        if (json) {
            out.push_back({{"criterion", r.id},
                           {"title", r.title},
                           {"status", r.pass ? "PASS" : "FAIL"},
                           {"detail", r.detail},
                           {"wall_ms", ms}});
        } else {
            std::printf("%s %d %s: %s", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
            if (!cfg.no_timing) std::printf(" [%.0f ms]", ms);
            std::printf("\n");
            std::fflush(stdout);
        }
    });
    if (json) std::cout << out.dump(2) << "\n";
    return failed ? 1 : 0;
}

int bench(const RunConfig& cfg) {
    const Caps c = q_caps(cfg);
    const auto rows = nok::bench::run(c, cfg.reps);
    bool ok = true;
    Json out = Json::array();
    if (cfg.output != "json")
        std::printf("threads: %d\n%-36s %12s %12s %s\n", nok::max_threads(), "kernel", "serial ms", "parallel ms",
                    "same");
    for (const auto& r : rows) {
        ok = ok && r.same_result;
        if (cfg.output == "json")
            out.push_back({{"kernel", r.kernel},
                           {"serial_ms", r.serial_ms},
                           {"parallel_ms", r.parallel_ms},
                           {"same_result", r.same_result}});
        else
            std::printf("%-36s %12.2f %12.2f %s\n", r.kernel.c_str(), r.serial_ms, r.parallel_ms,
                        r.same_result ? "yes" : "NO");
    }
    if (cfg.output == "json") std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_identity) {
    if (with_identity)
        sub->add_option("--identity", cfg.identity, "identity to check")->required()->check(CLI::IsMember(kIdentities));
    sub->add_option("--N", cfg.N, "partitions per tuple (fock_lemmas: largest L)");
    sub->add_option("--D", cfg.D, "total Q-degree cap (lemma_inf_finite: z-degree)");
    sub->add_option("--M", cfg.M, "tau window to certify");
    sub->add_option("--s-deg", cfg.s_deg, "total s-degree cap (t-mode identities)");
    sub->add_option("--max-size", cfg.max_size, "largest partition size in sweeps");
    sub->add_option("--mu", cfg.mu, "lemma_inf_finite: mu as comma-separated parts");
    sub->add_option("--nu", cfg.nu, "lemma_inf_finite: nu as comma-separated parts");
    sub->add_option("--samples", cfg.samples, "check this many random cases instead of the full sweep");
    sub->add_option("--seed", cfg.seed, "seed for --samples");
    sub->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--no-timing", cfg.no_timing, "report wall_ms as 0 (byte-identical reruns)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Nekrasov-Okounkov type identities"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto* v = app.add_subcommand("verify", "check an identity; exit 0 on exact match, 1 on mismatch");
    add_common(v, cfg, true);
    auto* t = app.add_subcommand("table", "print both sides coefficient by coefficient");
    add_common(t, cfg, true);
    auto* s = app.add_subcommand("selftest", "run every acceptance criterion");
    add_common(s, cfg, false);
    auto* b = app.add_subcommand("bench", "time serial vs OpenMP kernels");
    add_common(b, cfg, false);
    b->add_option("--reps", cfg.reps, "repetitions per path")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*v) {
            cfg.command = "verify";
            const auto reps = verify(cfg);
            bool ok = true;
            for (const auto& r : reps) ok = ok && r.match;
            if (cfg.output == "json") {
                Json arr = Json::array();
                for (const auto& r : reps) arr.push_back(to_json(r));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& r : reps) print_text(r, !cfg.no_timing);
            }
            return ok ? 0 : 1;
        }
        if (*t) return table(cfg);
        if (*s) return selftest(cfg);
        if (*b) return bench(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#ifndef WV_SWEEP_HPP
#define WV_SWEEP_HPP

// Batch verification: enumerate pic+ up to a coordinate cap, check every
// (lambda, mu) pair on every configured variety, and assemble a
// deterministic machine-readable report.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "wv/json_io.hpp"
#include "wv/multiply.hpp"
#include "wv/wonderful.hpp"

namespace wv {

struct SweepConfig {
    std::vector<Json> varieties; ///< variety descriptors
    std::int64_t max_coeff = 3;  ///< cap on weight coordinates
    int jobs = 1;                ///< worker count
    bool with_oracle = false;    ///< attach model cross-checks where a model exists
};

inline void validate(const SweepConfig& cfg) {
    if (cfg.varieties.empty()) throw std::invalid_argument("sweep config: empty variety list");
    if (cfg.max_coeff < 0) throw std::invalid_argument("sweep config: max_coeff must be >= 0");
    if (cfg.jobs < 1) throw std::invalid_argument("sweep config: jobs must be >= 1");
}

inline SweepConfig sweep_config_from_json(const Json& j) {
    SweepConfig cfg;
    for (const auto& v : j.at("varieties")) cfg.varieties.push_back(v);
    if (j.contains("max_coeff")) cfg.max_coeff = j.at("max_coeff").get<std::int64_t>();
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
    if (j.contains("with_oracle")) cfg.with_oracle = j.at("with_oracle").get<bool>();
    validate(cfg);
    return cfg;
}

/// All pic+ weights with coordinates in [0, max_coeff], lexicographic order.
inline std::vector<Weight> enumerate_pic_plus(const WonderfulVariety& x, std::int64_t max_coeff) {
    std::vector<Weight> out;
    const std::size_t rank = x.ambient().rank();
    Weight w = Weight::zero(rank);
    while (true) {
        if (pic_plus_contains(x, w)) out.push_back(w);
        std::size_t pos = rank;
        while (pos > 0) {
            if (w[pos - 1] < max_coeff) {
                ++w[pos - 1];
                for (std::size_t k = pos; k < rank; ++k) w[k] = 0;
                break;
            }
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

/// Run `fn(i)` for i in [0, count) on `jobs` workers; the first exception is
/// rethrown after all workers join.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct SweepSummary {
    std::size_t varieties = 0;
    std::size_t pairs = 0;
    std::size_t failed = 0;
    std::map<std::string, std::size_t> by_verdict;
};

struct SweepReport {
    std::vector<Json> results; ///< one certificate object per (variety, lambda, mu)
    SweepSummary summary;
};

/// Certificates for every (lambda, mu) pair of every configured variety.
/// Pairs are dispatched to a worker pool; results land in slots indexed by a
/// precomputed task list, so the report ordering -- (variety, lambda, mu),
/// each lexicographic -- does not depend on scheduling.
inline SweepReport run_sweep(const SweepConfig& cfg) {
    validate(cfg);

    struct Task {
        std::size_t variety;
        std::size_t li, mi;
    };
    std::vector<WonderfulVariety> varieties;
    std::vector<Json> descriptors;
    std::vector<std::vector<Weight>> weights;
    std::vector<Task> tasks;
    for (const auto& desc : cfg.varieties) {
        WonderfulVariety x = variety_from_json(desc);
        const auto ws = enumerate_pic_plus(x, cfg.max_coeff);
        const std::size_t vi = varieties.size();
        for (std::size_t li = 0; li < ws.size(); ++li)
            for (std::size_t mi = 0; mi < ws.size(); ++mi) tasks.push_back({vi, li, mi});
        varieties.push_back(std::move(x));
        descriptors.push_back(variety_to_json(varieties.back()));
        weights.push_back(ws);
    }

    SweepReport report;
    report.results.resize(tasks.size());
    report.summary.varieties = varieties.size();
    report.summary.pairs = tasks.size();

    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
        const Task& t = tasks[i];
        const WonderfulVariety& x = varieties[t.variety];
        const Weight& lambda = weights[t.variety][t.li];
        const Weight& mu = weights[t.variety][t.mi];
        const auto cert = check_surjectivity(x, lambda, mu);
        Json j = certificate_to_json(cert);
        j["variety"] = descriptors[t.variety];
        if (cfg.with_oracle && x.treatment() == Treatment::p1xp1_special) {
            const auto a = canonical_p1xp1_label(x, lambda);
            const auto b = canonical_p1xp1_label(x, mu);
            const GradedModel model = GradedModel::p1xp1();
            const Degree da{a.k1, a.k2}, db{b.k1, b.k2};
            j["oracle"] = oracle_to_json(model, da, db, oracle_surjective(model, da, db));
        }
        report.results[i] = std::move(j);
    });

    for (const auto& r : report.results) {
        const auto v = r.at("verdict").get<std::string>();
        ++report.summary.by_verdict[v];
        if (v == "failed") ++report.summary.failed;
    }
    return report;
}

/// {"schema":1, "results":[...], "summary":{...}}
inline Json report_to_json(const SweepReport& rep) {
    Json by = Json::object();
    for (const auto& [k, v] : rep.summary.by_verdict) by[k] = v;
    return Json{{"schema", 1},
                {"results", rep.results},
                {"summary", Json{{"varieties", rep.summary.varieties},
                                 {"pairs", rep.summary.pairs},
                                 {"failed", rep.summary.failed},
                                 {"by_verdict", by}}}};
}

} // namespace wv

#endif

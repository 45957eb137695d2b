#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"
#include "valuation.hpp"
#include "welch.hpp"

namespace padic {

/// Raised when the enumeration space exceeds the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SearchMode { Q1, Q2, Zauner, ZaunerStrong, Equiangular };

inline const char* to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::Q1: return "q1";
        case SearchMode::Q2: return "q2";
        case SearchMode::Zauner: return "zauner";
        case SearchMode::ZaunerStrong: return "zauner-strong";
        case SearchMode::Equiangular: return "equiangular";
    }
    return "?";
}

/// Brute-force enumeration request: all n-tuples of vectors with coordinates
/// drawn from a bounded-height rational grid, filtered by the mode's checker.
struct SearchSpec {
    std::uint64_t p = 2;
    std::size_t d = 1;
    std::size_t n = 1;
    SearchMode mode = SearchMode::Q1;
    unsigned height = 1;
    std::vector<Rational> entries;      // empty = resolve from height
    bool symmetry_pruning = true;
    std::uint64_t limit = UINT64_MAX;   // max hits to collect
    Integer budget = Integer(1000000);  // max configurations to enumerate
    unsigned workers = 1;
    std::optional<Rational> equi_a;     // Equiangular mode
    std::optional<AbsValue> equi_gamma; // Equiangular mode
    std::optional<Integer> target_n;    // Zauner modes: override for the |n| target
};

using HitReport = std::variant<QReport, ZaunerReport, EquiangularReport>;

struct SearchHit {
    FrameConfig config;
    HitReport report;
};

struct SearchResult {
    SearchSpec spec;
    std::vector<Rational> entries_used;
    Integer space_size;
    std::vector<SearchHit> hits;
    std::uint64_t configs_scanned = 0;
    bool truncated = false;
    double wall_seconds = 0.0;
};

inline void validate(const SearchSpec& spec) {
    PrimeContext ctx(spec.p); // fails fast on non-prime p
    if (spec.d < 1 || spec.n < 1) throw std::invalid_argument("SearchSpec: d and n must be positive");
    if (spec.height < 1) throw std::invalid_argument("SearchSpec: height must be at least 1");
    if (spec.workers < 1) throw std::invalid_argument("SearchSpec: workers must be at least 1");
    if (spec.mode == SearchMode::Zauner || spec.mode == SearchMode::ZaunerStrong) {
        if (spec.n != spec.d * spec.d) {
            throw ShapeError("SearchSpec: Zauner modes force n = d^2, got n = " + std::to_string(spec.n) +
                             " with d = " + std::to_string(spec.d));
        }
    }
    if (spec.mode == SearchMode::Equiangular) {
        if (!spec.equi_a || !spec.equi_gamma) {
            throw std::invalid_argument("SearchSpec: equiangular mode needs both a and gamma");
        }
        if (spec.equi_gamma->p() != ctx.p()) {
            throw std::invalid_argument("SearchSpec: gamma is a p-adic value for a different prime");
        }
    }
}

/// The entry grid. "auto" (an empty explicit list) resolves to every reduced
/// a/b with |a| <= H, 0 < b <= H; explicit lists pass through. Either way the
/// result is sorted ascending and deduplicated.
inline std::vector<Rational> candidate_entries(const SearchSpec& spec) {
    std::vector<Rational> out;
    if (spec.entries.empty()) {
        const long h = static_cast<long>(spec.height);
        out.emplace_back(0);
        for (long b = 1; b <= h; ++b) {
            for (long a = 1; a <= h; ++a) {
                if (mpz_class(gcd(Integer(a), Integer(b))) != 1) continue;
                out.push_back(make_rational(a, b));
                out.push_back(make_rational(-a, b));
            }
        }
    } else {
        out = spec.entries;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw std::invalid_argument("candidate_entries: resolved entry set is empty");
    return out;
}

namespace detail {

/// Per-candidate filter pipeline, cheap conditions first. Returns the full
/// checker report only for configurations that pass everything.
inline std::optional<HitReport> evaluate_candidate(const FrameConfig& config, const SearchSpec& spec) {
    const PrimeContext& ctx = config.ctx;
    switch (spec.mode) {
        case SearchMode::Q1:
        case SearchMode::Q2:
        case SearchMode::Zauner:
        case SearchMode::ZaunerStrong: {
            for (const Vector& v : config.vectors) {
                if (inner(v, v) != 1) return std::nullopt;
            }
            bool norms = spec.mode == SearchMode::Q2 || spec.mode == SearchMode::ZaunerStrong;
            if (norms) {
                for (const Vector& v : config.vectors) {
                    if (max_norm(v) != AbsValue::one(ctx.p())) return std::nullopt;
                }
            }
            if (!check_tight(config).is_tight) return std::nullopt;
            if (spec.mode == SearchMode::Q1 || spec.mode == SearchMode::Q2) {
                QReport q = spec.mode == SearchMode::Q1 ? q1_check(config) : q2_check(config);
                if (!q.ok) return std::nullopt;
                return HitReport(std::move(q));
            }
            ZaunerReport z = zauner_check(config, spec.mode == SearchMode::ZaunerStrong, spec.target_n);
            if (!z.verdict) return std::nullopt;
            return HitReport(std::move(z));
        }
        case SearchMode::Equiangular: {
            for (const Vector& v : config.vectors) {
                if (inner(v, v) != *spec.equi_a) return std::nullopt;
            }
            EquiangularReport e = equiangular_check(config, *spec.equi_a, *spec.equi_gamma);
            if (!e.ok) return std::nullopt;
            return HitReport(std::move(e));
        }
    }
    return std::nullopt;
}

struct Partition {
    std::vector<SearchHit> hits;
    std::uint64_t scanned = 0;
};

/// Enumeration space size: vector candidates V = e^d; configurations are
/// V^n, or multiset_count(V, n) = C(V+n-1, n) with symmetry pruning.
inline Integer space_size(std::size_t entry_count, const SearchSpec& spec) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), entry_count, spec.d);
    Integer total;
    if (spec.symmetry_pruning) {
        Integer top = v + static_cast<unsigned long>(spec.n) - 1;
        mpz_bin_ui(total.get_mpz_t(), top.get_mpz_t(), spec.n);
    } else {
        mpz_pow_ui(total.get_mpz_t(), v.get_mpz_t(), spec.n);
    }
    return total;
}

inline Vector decode_vector(std::uint64_t id, const std::vector<Rational>& entries, std::size_t d,
                            const PrimeContext& ctx) {
    const std::uint64_t e = entries.size();
    std::vector<Rational> coords(d);
    // First coordinate is the most significant digit.
    for (std::size_t i = d; i-- > 0;) {
        coords[i] = entries[id % e];
        id /= e;
    }
    return Vector{ctx, std::move(coords)};
}

/// Enumerates all configurations whose first vector is vector_ids[0] = v0, in
/// lexicographic order, collecting up to `limit` hits.
inline Partition scan_partition(std::uint64_t v0, std::uint64_t vector_count, const std::vector<Rational>& entries,
                                const SearchSpec& spec, const PrimeContext& ctx) {
    Partition part;
    const std::size_t n = spec.n;
    std::vector<std::uint64_t> ids(n, 0);
    ids[0] = v0;
    for (std::size_t j = 1; j < n; ++j) ids[j] = spec.symmetry_pruning ? ids[j - 1] : 0;

    std::vector<Vector> decoded;
    while (true) {
        decoded.clear();
        decoded.reserve(n);
        for (std::uint64_t id : ids) decoded.push_back(decode_vector(id, entries, spec.d, ctx));
        FrameConfig config(ctx, spec.d, std::move(decoded));
        ++part.scanned;
        if (auto report = evaluate_candidate(config, spec)) {
            part.hits.push_back(SearchHit{std::move(config), std::move(*report)});
            if (part.hits.size() >= spec.limit) break;
        }

        // Odometer over positions 1..n-1 (position 0 is the partition key).
        std::size_t pos = n;
        while (pos-- > 1) {
            if (++ids[pos] < vector_count) {
                for (std::size_t j = pos + 1; j < n; ++j) ids[j] = spec.symmetry_pruning ? ids[j - 1] : 0;
                break;
            }
        }
        if (pos == 0) break;
    }
    return part;
}

} // namespace detail

/// Deterministic brute-force search. Vectors are enumerated in lexicographic
/// order over the entry list (vectors ordered, coordinates ordered); with
/// symmetry pruning only configurations whose vectors are in nondecreasing
/// order are visited. The first-vector choice partitions the space across
/// workers; partial results merge in partition order, so the hit list is
/// identical for every worker count.
inline SearchResult run_search(const SearchSpec& spec) {
    validate(spec);
    PrimeContext ctx(spec.p);
    auto t0 = std::chrono::steady_clock::now();

    SearchResult result;
    result.spec = spec;
    result.entries_used = candidate_entries(spec);
    result.space_size = detail::space_size(result.entries_used.size(), spec);
    if (result.space_size > spec.budget) {
        throw BudgetError("run_search: estimated space " + result.space_size.get_str() + " exceeds budget " +
                          spec.budget.get_str());
    }

    Integer vec_count_z;
    mpz_ui_pow_ui(vec_count_z.get_mpz_t(), result.entries_used.size(), spec.d);
    const std::uint64_t vector_count = static_cast<std::uint64_t>(vec_count_z.get_ui());

    std::vector<detail::Partition> partitions(vector_count);
    std::atomic<std::uint64_t> next{0};
    auto work = [&]() {
        while (true) {
            std::uint64_t v0 = next.fetch_add(1);
            if (v0 >= vector_count) break;
            partitions[v0] = detail::scan_partition(v0, vector_count, result.entries_used, spec, ctx);
        }
    };

    const unsigned workers = std::min<std::uint64_t>(spec.workers, vector_count);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (detail::Partition& part : partitions) {
        result.configs_scanned += part.scanned;
        for (SearchHit& hit : part.hits) {
            if (result.hits.size() >= spec.limit) {
                result.truncated = true;
                break;
            }
            result.hits.push_back(std::move(hit));
        }
    }
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace padic

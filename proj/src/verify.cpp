#include "hcbp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hcbp/abr.hpp"
#include "hcbp/core_sequences.hpp"
#include "hcbp/genfunc.hpp"
#include "hcbp/grid_oracle.hpp"
#include "hcbp/partitions.hpp"
#include "hcbp/sequence_io.hpp"

namespace hcbp {

namespace {

using Outcome = std::optional<Counterexample>;

Counterexample fail_at(Index n, std::string detail) { return Counterexample{n, std::move(detail)}; }

class SuiteRun {
public:
    explicit SuiteRun(Suite suite) : suite_(suite) {}

    template <class Check>
    void property(std::string name, Index checked_to, Check&& check)
    {
        PropertyResult result{suite_, std::move(name), checked_to, std::nullopt};
        try {
            result.counterexample = check();
        } catch (const std::exception& error) {
            result.counterexample = fail_at(checked_to, std::string("exception: ") + error.what());
        }
        results_.push_back(std::move(result));
    }

    std::vector<PropertyResult> take() { return std::move(results_); }

private:
    Suite suite_;
    std::vector<PropertyResult> results_;
};

std::string pairs_text(const std::vector<Bipartition>& pairs)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        out << (t ? "," : "") << '(' << pairs[t].n0 << ',' << pairs[t].n1 << ')';
    }
    out << '}';
    return out.str();
}

// ---------------------------------------------------------------- agreement

std::vector<PropertyResult> run_agreement(Index limit, const VerifyBounds& bounds,
                                          const HRoutes& routes)
{
    SuiteRun run(Suite::agreement);
    const Index top = std::min(limit, bounds.get("agreement"));

    run.property("base vector h(1..8) = (0,1,1,1,2,2,1,1)", 8, [&]() -> Outcome {
        static constexpr Index kBase[8] = {0, 1, 1, 1, 2, 2, 1, 1};
        for (Index n = 1; n <= 8; ++n) {
            const Index got[4] = {routes.enumerate(n), routes.reflect(n), routes.mod8(n),
                                  routes.abr(n)};
            for (const Index value : got) {
                if (value != kBase[n - 1]) {
                    return fail_at(n, "expected " + std::to_string(kBase[n - 1]) + ", got " +
                                          std::to_string(value));
                }
            }
        }
        return std::nullopt;
    });

    run.property("h_enum = h_reflect = h_mod8 = h_abr", top, [&]() -> Outcome {
        for (Index n = 1; n <= top; ++n) {
            const Index a = routes.enumerate(n);
            const Index b = routes.reflect(n);
            const Index c = routes.mod8(n);
            const Index e = routes.abr(n);
            if (a != b || a != c || a != e) {
                return fail_at(n, "enum=" + std::to_string(a) + " reflect=" + std::to_string(b) +
                                      " mod8=" + std::to_string(c) + " abr=" + std::to_string(e));
            }
        }
        return std::nullopt;
    });

    run.property("1 <= h(n) <= ceil(lg n) - 1 for n >= 3; h(1) = 0, h(2) = 1", top, [&]() -> Outcome {
        if (routes.reflect(1) != 0 || routes.reflect(2) != 1) {
            return fail_at(routes.reflect(1) != 0 ? 1 : 2, "small case");
        }
        for (Index n = 3; n <= top; ++n) {
            const Index h = routes.reflect(n);
            if (h < 1 || h + 1 > ceil_lg(n)) {
                return fail_at(n, "h = " + std::to_string(h));
            }
        }
        return std::nullopt;
    });

    run.property("reflection terminates within ceil(lg n) - 1 steps", top, [&]() -> Outcome {
        for (Index n = 3; n <= top; ++n) {
            if (reflect_steps(n) + 1 > ceil_lg(n)) {
                return fail_at(n, std::to_string(reflect_steps(n)) + " steps");
            }
        }
        return std::nullopt;
    });

    return run.take();
}

// ------------------------------------------------------------------ maximin

std::vector<PropertyResult> run_maximin(Index limit, const VerifyBounds& bounds)
{
    SuiteRun run(Suite::maximin);
    const Index top = std::max<Index>(2, std::min(limit, bounds.get("maximin")));
    const MaximinTable table(top);

    run.property("maximin value = f_digit = f_dc", top, [&]() -> Outcome {
        for (Index n = 1; n <= top; ++n) {
            const Wide digit = f_digit(n);
            if (table.value(n) != digit || f_dc(n) != digit) {
                return fail_at(n, "maximin=" + to_string(table.value(n)) + " digit=" +
                                      to_string(digit) + " dc=" + to_string(f_dc(n)));
            }
        }
        return std::nullopt;
    });

    run.property("maximin argmax = HCBP set", top, [&]() -> Outcome {
        for (Index n = 2; n <= top; ++n) {
            const auto argmax = table.solve(n).argmax;
            const auto hcbp = enumerate_hcbp(n).pairs;
            if (argmax != hcbp) {
                return fail_at(n, "argmax " + pairs_text(argmax) + " vs HCBP " + pairs_text(hcbp));
            }
        }
        return std::nullopt;
    });

    run.property("every HCBP attains n1 + f(n1) + f(n0) = f(n)", top, [&]() -> Outcome {
        for (Index n = 2; n <= top; ++n) {
            const Wide fn = f_digit(n);
            for (const auto& p : enumerate_hcbp(n).pairs) {
                if (p.n1 + f_digit(p.n1) + f_digit(p.n0) != fn) {
                    return fail_at(n, "pair " + pairs_text({p}));
                }
            }
        }
        return std::nullopt;
    });

    run.property("HCBP via i has a part divisible by 2^{i-1}; odd HCBP parts of even n are equal",
                 top, [&]() -> Outcome {
                     for (Index n = 2; n <= top; ++n) {
                         for (const auto& w : witnessed_hcbp(n)) {
                             for (const unsigned i : w.indices) {
                                 const Index step = pow2(i - 1);
                                 if (w.pair.n0 % step != 0 && w.pair.n1 % step != 0) {
                                     return fail_at(n, "index " + std::to_string(i));
                                 }
                             }
                             if (n % 2 == 0 && w.pair.n0 % 2 == 1 && w.pair.n0 != w.pair.n1) {
                                 return fail_at(n, "unequal odd parts " + pairs_text({w.pair}));
                             }
                         }
                     }
                     return std::nullopt;
                 });

    return run.take();
}

// ----------------------------------------------------------------- geometry

std::vector<PropertyResult> run_geometry(Index limit, const VerifyBounds& bounds)
{
    SuiteRun run(Suite::geometry);
    const Index exhaustive_top = std::min({limit, bounds.get("geometry.exhaustive"), Index{16}});
    const Index prefix_top = std::min(limit, bounds.get("geometry.prefix"));

    run.property("exhaustive max over n-subsets of Q_4 = f(n)", exhaustive_top, [&]() -> Outcome {
        for (Index n = 1; n <= exhaustive_top; ++n) {
            const Index best = exhaustive_max_edges(n, 4);
            if (best != f_digit(n)) {
                return fail_at(n, "exhaustive " + std::to_string(best));
            }
        }
        return std::nullopt;
    });

    run.property("first n binary points induce f(n) edges; point n adds s(n)", prefix_top,
                 [&]() -> Outcome {
                     Index previous = 0;
                     for (Index n = 1; n <= prefix_top; ++n) {
                         const unsigned k = std::max(1U, ceil_lg(n));
                         const Index edges = induced_edge_count(beta_prefix(n, k));
                         if (edges != f_digit(n)) {
                             return fail_at(n, "edges " + std::to_string(edges));
                         }
                         if (n >= 2 && edges - previous != digit_sum(n - 1)) {
                             return fail_at(n, "increment " + std::to_string(edges - previous));
                         }
                         previous = edges;
                     }
                     return std::nullopt;
                 });

    run.property("coordinate hyperplane splits = HCBP set", prefix_top, [&]() -> Outcome {
        for (Index n = 2; n <= prefix_top; ++n) {
            const auto geometric = coordinate_splits(n).pairs;
            const auto algebraic = enumerate_hcbp(n).pairs;
            if (geometric != algebraic) {
                return fail_at(n, pairs_text(geometric) + " vs " + pairs_text(algebraic));
            }
        }
        return std::nullopt;
    });

    run.property("column imbalance of coordinate i = d_{k-i+1}(n)", prefix_top, [&]() -> Outcome {
        for (Index n = 2; n <= std::min<Index>(prefix_top, 1024); ++n) {
            const unsigned k = ceil_lg(n);
            for (unsigned i = 1; i <= k; ++i) {
                if (column_imbalance(n, i) != d(k - i + 1, n)) {
                    return fail_at(n, "coordinate " + std::to_string(i));
                }
            }
        }
        return std::nullopt;
    });

    return run.take();
}

// ------------------------------------------------------------------- series

std::vector<PropertyResult> run_series(Index limit, const VerifyBounds& bounds)
{
    SuiteRun run(Suite::series);
    const Index order = std::min(limit, bounds.get("series"));
    const auto h_series = expand_h(order);
    const auto c_series = expand_c(order);

    run.property("h(x) coefficients = h_enum = h_reflect", order, [&]() -> Outcome {
        for (Index n = 0; n < order; ++n) {
            if (h_series[n] != h_enum(n) || h_series[n] != h_reflect(n)) {
                return fail_at(n, "coefficient " + std::to_string(h_series[n]));
            }
        }
        return std::nullopt;
    });

    run.property("c(x) coefficients = c_count = c_via_slices = c_reflect", order, [&]() -> Outcome {
        for (Index n = 0; n < order; ++n) {
            const Index coefficient = c_series[n];
            if (coefficient != c_count(n) || coefficient != c_via_slices(n) ||
                coefficient != c_reflect(n)) {
                return fail_at(n, "coefficient " + std::to_string(coefficient));
            }
        }
        return std::nullopt;
    });

    run.property("slice i holds at most one distinct d_j(n), namely d_{i+1}(n)", order,
                 [&]() -> Outcome {
                     for (Index n = 1; n < order; ++n) {
                         const unsigned k = ceil_lg(n);
                         for (unsigned i = 1; i <= k; ++i) {
                             std::set<Index> in_slice;
                             for (unsigned j = 1; j <= k + 1; ++j) {
                                 const Index v = d(j, n);
                                 if (v > pow2(i - 1) && v <= pow2(i)) {
                                     in_slice.insert(v);
                                     if (v != d(i + 1, n)) {
                                         return fail_at(n, "slice " + std::to_string(i));
                                     }
                                 }
                             }
                             if (in_slice.size() != c_i_indicator(i, n)) {
                                 return fail_at(n, "indicator at slice " + std::to_string(i));
                             }
                         }
                     }
                     return std::nullopt;
                 });

    run.property("c_i(n) = c_i(2^k - n) for i < k, c_k(n) = 1, c_k(2^k - n) = 0", order,
                 [&]() -> Outcome {
                     for (Index n = 3; n < order; ++n) {
                         const unsigned k = ceil_lg(n);
                         const Index mirror = pow2(k) - n;
                         for (unsigned i = 1; i < k; ++i) {
                             if (c_i_indicator(i, n) != c_i_indicator(i, mirror)) {
                                 return fail_at(n, "slice " + std::to_string(i));
                             }
                         }
                         if (n != pow2(k) &&
                             (c_i_indicator(k, n) != 1 || c_i_indicator(k, mirror) != 0)) {
                             return fail_at(n, "top slice");
                         }
                     }
                     return std::nullopt;
                 });

    return run.take();
}

// ------------------------------------------------------------------- strata

std::vector<PropertyResult> run_strata(Index limit, const VerifyBounds& bounds)
{
    SuiteRun run(Suite::strata);
    const unsigned top_k = static_cast<unsigned>(
        std::max<Index>(2, std::min<Index>(ceil_lg(limit), bounds.get("strata"))));
    const StrataOptions options{std::max(top_k, 20U)};

    run.property("|H_k(l)| = 2 C(k-2, l-1) with row sum 2^{k-1}", top_k, [&]() -> Outcome {
        for (unsigned k = 2; k <= top_k; ++k) {
            const auto rows = strata_table(k, options);
            Index sum = 0;
            for (const auto& row : rows) {
                if (!row.agrees()) {
                    return fail_at(k, "l = " + std::to_string(row.level) + ": scan " +
                                          std::to_string(row.brute_count) + ", formula " +
                                          std::to_string(row.formula_count));
                }
                sum += row.brute_count;
            }
            if (sum != pow2(k - 1)) {
                return fail_at(k, "row sum " + std::to_string(sum));
            }
        }
        return std::nullopt;
    });

    run.property("extremal sets match the scan", top_k, [&]() -> Outcome {
        for (unsigned k = 2; k <= top_k; ++k) {
            extremal_pairs(k, options);
        }
        return std::nullopt;
    });

    return run.take();
}

// ---------------------------------------------------------------------- abr

// Every valid exponent list with leading exponent <= max_top, in no
// particular order.
void enumerate_abr_lists(unsigned max_top, const std::function<void(const AbrRep&)>& visit)
{
    AbrRep rep;
    // Extend a strictly decreasing prefix; a list is emitted when its last
    // gap is >= 2 (or it has length one).
    std::function<void()> extend = [&]() {
        const auto& e = rep.exponents;
        if (e.size() == 1 || e[e.size() - 2] > e.back() + 1) {
            visit(rep);
        }
        for (unsigned next = 0; next < e.back(); ++next) {
            rep.exponents.push_back(next);
            extend();
            rep.exponents.pop_back();
        }
    };
    for (unsigned top = 0; top <= max_top; ++top) {
        rep.exponents.assign(1, top);
        extend();
    }
}

std::vector<PropertyResult> run_abr(Index limit, const VerifyBounds& bounds)
{
    SuiteRun run(Suite::abr);
    const Index top = std::min(limit, bounds.get("abr.roundtrip"));
    const unsigned max_top = static_cast<unsigned>(
        std::min<Index>(ceil_lg(limit), bounds.get("abr.enumerate")));

    run.property("abr_value(abr_greedy(n)) = n and abr_greedy = abr_runs", top, [&]() -> Outcome {
        for (Index n = 1; n <= top; ++n) {
            const AbrRep greedy = abr_greedy(n);
            if (abr_value(greedy) != n) {
                return fail_at(n, "round trip " + abr_format(greedy));
            }
            if (abr_runs(n) != greedy) {
                return fail_at(n, abr_format(greedy) + " vs runs " + abr_format(abr_runs(n)));
            }
        }
        return std::nullopt;
    });

    run.property("tail of the ABR is the ABR of 2^{a_1} - n; a_l = 0 iff n odd", top,
                 [&]() -> Outcome {
                     for (Index n = 1; n <= top; ++n) {
                         const AbrRep rep = abr_greedy(n);
                         if ((rep.exponents.back() == 0) != (n % 2 == 1)) {
                             return fail_at(n, "parity");
                         }
                         if (rep.length() >= 2) {
                             AbrRep tail{{rep.exponents.begin() + 1, rep.exponents.end()}};
                             if (tail != abr_greedy(pow2(rep.exponents.front()) - n)) {
                                 return fail_at(n, "tail");
                             }
                         }
                     }
                     return std::nullopt;
                 });

    run.property("valid exponent lists biject onto [1, 2^a_max]", pow2(max_top), [&]() -> Outcome {
        std::vector<unsigned char> hits(pow2(max_top) + 1, 0);
        std::optional<Counterexample> problem;
        enumerate_abr_lists(max_top, [&](const AbrRep& rep) {
            if (problem) {
                return;
            }
            const Index value = abr_value(rep);
            if (value == 0 || value > pow2(max_top)) {
                problem = fail_at(value, "out of range " + abr_format(rep));
            } else if (hits[value]++ != 0) {
                problem = fail_at(value, "two lists evaluate here");
            } else if (abr_greedy(value) != rep) {
                problem = fail_at(value, "differs from greedy " + abr_format(rep));
            }
        });
        if (problem) {
            return problem;
        }
        for (Index n = 1; n < hits.size(); ++n) {
            if (hits[n] != 1) {
                return fail_at(n, "not covered");
            }
        }
        return std::nullopt;
    });

    return run.take();
}

// ------------------------------------------------------------------- claims

std::vector<PropertyResult> run_claims(Index limit, const VerifyBounds& bounds)
{
    SuiteRun run(Suite::claims);
    const Index top = std::min(limit, bounds.get("claims.n"));
    const unsigned max_i = static_cast<unsigned>(bounds.get("claims.i"));
    const Index lemma_top = std::min(limit, bounds.get("lemma.n"));
    const unsigned lemma_i = static_cast<unsigned>(bounds.get("lemma.i"));

    run.property("0 <= d_i(n) <= min(n, 2^{i-1}); period 2^i; even about multiples of 2^{i-1}",
                 top, [&]() -> Outcome {
                     for (unsigned i = 1; i <= max_i; ++i) {
                         const Index half = pow2(i - 1);
                         for (Index n = 0; n <= top; ++n) {
                             const Index v = d(i, n);
                             if (v > std::min(n, half) || d(i, n + pow2(i)) != v) {
                                 return fail_at(n, "i = " + std::to_string(i));
                             }
                             const Index q = n / half * half;
                             const Index t = n - q;
                             if (t <= q && d(i, q - t) != v) {
                                 return fail_at(n, "reflection, i = " + std::to_string(i));
                             }
                         }
                     }
                     return std::nullopt;
                 });

    run.property("d_i(m) = d_i(n) iff m = +/-n mod 2^i", top, [&]() -> Outcome {
        // d_i is constant on each class {r, -r} mod 2^i; check it is well
        // defined there and injective across classes.
        for (unsigned i = 1; i <= max_i; ++i) {
            const Index modulus = pow2(i);
            std::vector<std::optional<Index>> by_class(modulus / 2 + 1);
            for (Index n = 0; n <= top; ++n) {
                const Index r = n % modulus;
                const Index cls = std::min(r, (modulus - r) % modulus);
                const Index v = d(i, n);
                if (by_class[cls] && *by_class[cls] != v) {
                    return fail_at(n, "not constant on its class, i = " + std::to_string(i));
                }
                by_class[cls] = v;
            }
            std::set<Index> seen;
            for (const auto& v : by_class) {
                if (v && !seen.insert(*v).second) {
                    return fail_at(*v, "two classes share a value, i = " + std::to_string(i));
                }
            }
        }
        return std::nullopt;
    });

    run.property("i <= j: d_i(n) <= d_j(n), and d_j(m) = d_i(n) implies d_j(m) = d_i(m)", top,
                 [&]() -> Outcome {
                     for (unsigned i = 1; i <= max_i; ++i) {
                         std::set<Index> image;
                         for (Index n = 0; n <= top; ++n) {
                             image.insert(d(i, n));
                         }
                         for (unsigned j = i; j <= max_i; ++j) {
                             for (Index m = 0; m <= top; ++m) {
                                 if (d(i, m) > d(j, m)) {
                                     return fail_at(m, "monotone, i = " + std::to_string(i));
                                 }
                                 if (image.count(d(j, m)) != 0 && d(j, m) != d(i, m)) {
                                     return fail_at(m, "transfer, i = " + std::to_string(i) +
                                                           ", j = " + std::to_string(j));
                                 }
                             }
                         }
                     }
                     return std::nullopt;
                 });

    run.property("d_{i+1}(2n) = 2 d_i(n), d_{i+1}(2n+1) = d_i(n+1) + d_i(n)", top, [&]() -> Outcome {
        for (unsigned i = 1; i <= max_i; ++i) {
            for (Index n = 0; n <= top; ++n) {
                if (d(i + 1, 2 * n) != 2 * d(i, n) ||
                    d(i + 1, 2 * n + 1) != d(i, n + 1) + d(i, n)) {
                    return fail_at(n, "i = " + std::to_string(i));
                }
            }
        }
        return std::nullopt;
    });

    run.property("d_j(n+1) = d_i(n) +/- 1 implies the sum is d_l(2n+1), l in {3, i+1, j+1}",
                 lemma_top, [&]() -> Outcome {
                     for (Index n = 0; n <= lemma_top; ++n) {
                         for (unsigned i = 1; i <= lemma_i; ++i) {
                             for (unsigned j = 1; j <= lemma_i; ++j) {
                                 const Index a = d(j, n + 1);
                                 const Index b = d(i, n);
                                 if (a != b + 1 && a + 1 != b) {
                                     continue;
                                 }
                                 const Index sum = a + b;
                                 const Index target = 2 * n + 1;
                                 if (d(3, target) != sum && d(i + 1, target) != sum &&
                                     d(j + 1, target) != sum) {
                                     return fail_at(n, "i = " + std::to_string(i) +
                                                           ", j = " + std::to_string(j));
                                 }
                             }
                         }
                     }
                     return std::nullopt;
                 });

    run.property("f(n+1) - f(n) = s(n)", top, [&]() -> Outcome {
        for (Index n = 1; n <= top; ++n) {
            if (f_digit(n + 1) - f_digit(n) != digit_sum(n)) {
                return fail_at(n, "increment");
            }
        }
        return std::nullopt;
    });

    return run.take();
}

std::vector<PropertyResult> run_suite(Suite suite, Index limit, const VerifyBounds& bounds,
                                      const HRoutes& routes)
{
    switch (suite) {
    case Suite::agreement:
        return run_agreement(limit, bounds, routes);
    case Suite::maximin:
        return run_maximin(limit, bounds);
    case Suite::geometry:
        return run_geometry(limit, bounds);
    case Suite::series:
        return run_series(limit, bounds);
    case Suite::strata:
        return run_strata(limit, bounds);
    case Suite::abr:
        return run_abr(limit, bounds);
    case Suite::claims:
        return run_claims(limit, bounds);
    }
    throw std::logic_error("run_suite: unknown suite");
}

} // namespace

std::optional<Suite> parse_suite(std::string_view text)
{
    for (const Suite suite : all_suites()) {
        if (suite_name(suite) == text) {
            return suite;
        }
    }
    return std::nullopt;
}

std::string_view suite_name(Suite suite)
{
    switch (suite) {
    case Suite::agreement: return "agreement";
    case Suite::maximin: return "maximin";
    case Suite::geometry: return "geometry";
    case Suite::series: return "series";
    case Suite::strata: return "strata";
    case Suite::abr: return "abr";
    case Suite::claims: return "claims";
    }
    return "?";
}

const std::vector<Suite>& all_suites()
{
    static const std::vector<Suite> suites = {Suite::agreement, Suite::maximin, Suite::geometry,
                                              Suite::series,    Suite::strata,  Suite::abr,
                                              Suite::claims};
    return suites;
}

VerifyBounds::VerifyBounds()
    : bounds_{
          {"agreement", 100000},      {"maximin", 1024},       {"geometry.exhaustive", 16},
          {"geometry.prefix", 4096},  {"series", 4096},        {"strata", 16},
          {"abr.roundtrip", 1 << 20}, {"abr.enumerate", 14},   {"claims.n", 1 << 14},
          {"claims.i", 12},           {"lemma.n", 1 << 12},    {"lemma.i", 10},
      }
{
}

Index VerifyBounds::get(const std::string& key) const
{
    const auto it = bounds_.find(key);
    if (it == bounds_.end()) {
        throw std::invalid_argument("unknown verification bound '" + key + "'");
    }
    return it->second;
}

void VerifyBounds::set(const std::string& key, Index value)
{
    const auto it = bounds_.find(key);
    if (it == bounds_.end()) {
        throw std::invalid_argument("unknown verification bound '" + key + "'");
    }
    if ((key == "claims.i" || key == "lemma.i") && (value < 1 || value > 40)) {
        throw std::invalid_argument(key + " must be in [1, 40]");
    }
    if (key == "abr.enumerate" && value > 24) {
        throw std::invalid_argument("abr.enumerate must be <= 24");
    }
    it->second = value;
}

void VerifyBounds::load(std::istream& in, const std::string& source)
{
    std::string line;
    std::size_t number = 0;
    const auto trim = [](std::string text) {
        const auto begin = text.find_first_not_of(" \t\r");
        if (begin == std::string::npos) {
            return std::string();
        }
        const auto end = text.find_last_not_of(" \t\r");
        return text.substr(begin, end - begin + 1);
    };
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto where = source + ":" + std::to_string(number);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(where + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            set(key, parse_decimal(value, key));
        } catch (const std::invalid_argument& error) {
            throw std::invalid_argument(where + ": " + error.what());
        }
    }
}

void VerifyBounds::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    load(in, path);
}

HRoutes HRoutes::standard()
{
    return HRoutes{h_enum, h_reflect, h_mod8, h_abr};
}

bool VerifyReport::passed() const noexcept { return failures() == 0; }

std::size_t VerifyReport::failures() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed(); }));
}

VerifyReport run_verify(Index limit, const std::vector<Suite>& suites, const VerifyBounds& bounds,
                        const HRoutes& routes)
{
    if (limit < 8) {
        throw std::invalid_argument("verify: limit must be >= 8");
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::future<std::vector<PropertyResult>>> pending;
    pending.reserve(suites.size());
    for (const Suite suite : suites) {
        pending.push_back(std::async(std::launch::async, [=, &bounds, &routes] {
            return run_suite(suite, limit, bounds, routes);
        }));
    }
    VerifyReport report;
    report.limit = limit;
    for (auto& future : pending) {
        auto results = future.get();
        report.results.insert(report.results.end(), std::make_move_iterator(results.begin()),
                              std::make_move_iterator(results.end()));
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void print_report(std::ostream& out, const VerifyReport& report)
{
    for (const auto& result : report.results) {
        out << (result.passed() ? "PASS" : "FAIL") << "  [" << suite_name(result.suite) << "] "
            << result.property << " (to " << result.checked_to << ")";
        if (!result.passed()) {
            out << "  counterexample n=" << result.counterexample->n << ": "
                << result.counterexample->detail;
        }
        out << '\n';
    }
    out << "verify: " << report.results.size() - report.failures()
        << '/' << report.results.size() << " properties passed (limit " << report.limit << ")\n";
}

} // namespace hcbp

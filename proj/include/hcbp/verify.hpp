#pragma once

// Cross-verification suites run by `hcbp verify`. Each suite checks a family
// of invariants up to a per-suite bound, capped by the caller's limit, and
// reports the first counterexample of every failing property.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcbp/types.hpp"

namespace hcbp {

enum class Suite { agreement, maximin, geometry, series, strata, abr, claims };

std::optional<Suite> parse_suite(std::string_view text);
std::string_view suite_name(Suite suite);
const std::vector<Suite>& all_suites();

/// Per-suite bounds keyed as in config/verify.conf:
///
///   agreement            n range of the four-way h agreement
///   maximin              n range of the maximin table checks
///   geometry.exhaustive  n range of the exhaustive Q_4 search (at most 16)
///   geometry.prefix      n range of the prefix edge and hyperplane checks
///   series               truncation order of c(x) and h(x)
///   strata               largest k of the stratum scan
///   abr.roundtrip        n range of the ABR round trip
///   abr.enumerate        largest leading exponent of the ABR enumeration
///   claims.n             n range of the d_i laws
///   claims.i             largest index i of the d_i laws
///   lemma.n              n range of the d_i(n) +/- 1 pairing law
///   lemma.i              largest i, j of the pairing law
class VerifyBounds {
public:
    VerifyBounds(); // built-in defaults

    Index get(const std::string& key) const;
    void set(const std::string& key, Index value);
    const std::map<std::string, Index>& entries() const noexcept { return bounds_; }

    /// Reads "key = value" lines; '#' starts a comment. Unknown keys and
    /// malformed lines throw std::invalid_argument naming the line.
    void load(std::istream& in, const std::string& source = "<config>");
    void load_file(const std::string& path);

    /// Environment variable naming a config file that replaces the defaults.
    static constexpr const char* kConfigEnv = "HCBP_VERIFY_CONFIG";

private:
    std::map<std::string, Index> bounds_;
};

/// The four h(n) routes; tests substitute faulty ones.
struct HRoutes {
    std::function<Index(Index)> enumerate;
    std::function<Index(Index)> reflect;
    std::function<Index(Index)> mod8;
    std::function<Index(Index)> abr;

    static HRoutes standard();
};

struct Counterexample {
    Index n = 0;
    std::string detail;
};

struct PropertyResult {
    Suite suite = Suite::agreement;
    std::string property;
    Index checked_to = 0;
    std::optional<Counterexample> counterexample; // present iff failed

    bool passed() const noexcept { return !counterexample.has_value(); }
};

struct VerifyReport {
    Index limit = 0;
    std::vector<PropertyResult> results;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept;
    std::size_t failures() const noexcept;
};

/// Runs the suites concurrently; results are ordered as `suites`. limit >= 8.
VerifyReport run_verify(Index limit, const std::vector<Suite>& suites,
                        const VerifyBounds& bounds = VerifyBounds(),
                        const HRoutes& routes = HRoutes::standard());

/// One line per property; timing goes to the report, not the data stream.
void print_report(std::ostream& out, const VerifyReport& report);

} // namespace hcbp

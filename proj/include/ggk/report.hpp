#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggk/curve.hpp"
#include "ggk/orderbound.hpp"

namespace ggk {

enum class Format { Csv, Json, Markdown };

/// "csv", "json" or "md"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// One line of a best-code report: the dual of C_L(D, a1 Q0 + a2 Qinf) has
/// length n, dimension k, and minimum distance at least d_2p; d_1p is the best
/// one-point estimate for the same n and k.
struct ReportRow {
    Int n = 0;
    Int k = 0;
    Int a1 = 0;
    Int a2 = 0;
    Int d_2p = 0;
    Int d_1p = 0;
};

/// Best-code rows in descending k.
std::vector<ReportRow> best_rows(const CurveParams& c, const BoundTable& table,
                                 OnePointRule rule = OnePointRule::TableAxes);

/// All CurveParams fields as one JSON object, newline terminated.
void write_params(std::ostream& out, const CurveParams& c);

/// One record per cell: a, b, deg, dim_code, dual_dim, goppa, order_bound;
/// ordered by degree, then a.
void write_table(std::ostream& out, const CurveParams& c, const BoundTable& table, Format fmt);

/// Columns n, k, a1, a2, d_2P, d_1P.
void write_best(std::ostream& out, const std::vector<ReportRow>& rows, Format fmt);

struct VerifyOptions {
    Int grid_cap = 12;      ///< full grid [0, grid_cap]^2 on curves with n <= full_grid_max_n
    Int full_grid_max_n = 64;
    Int samples = 20;       ///< sampled divisors on larger curves
    Int tail_rows = 3;      ///< best-code rows k = 1 .. tail_rows checked for distance
    Int work_limit = Int{1} << 28;
    std::uint64_t seed = 0x5eed;
};

struct CheckResult {
    std::string name;
    Int passed = 0;
    Int total = 0;
    /// Reported but does not affect the overall verdict.
    bool informational = false;

    [[nodiscard]] bool ok() const noexcept { return informational || passed == total; }
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool ok() const noexcept;
};

/// Divisors exercised by run_verify: the full grid on small curves, otherwise
/// `samples` pseudo-random cells with a + b <= default_delta(c).
std::vector<TwoPointDivisor> verify_divisors(const CurveParams& c, const VerifyOptions& opts);

/// Exact oracle suite: point count, multiplier nonvanishing, rank agreement,
/// bound soundness, and duality under m_dual (checked) and m_dual_printed
/// (informational). Throws FieldTooLarge when q^(2e) > 2^16.
VerifyReport run_verify(const CurveParams& c, const VerifyOptions& opts = {});

void write_verify(std::ostream& out, const CurveParams& c, const VerifyReport& report);

}  // namespace ggk

// ggk: order bounds for two-point codes on generalized GK curves.
//
//   ggk params --q 2 --e 3
//   ggk table  --q 2 --e 3 --format csv [--max-degree D] [--output FILE]
//   ggk best   --q 2 --e 3 --format md  [--one-point axes|recursion]
//   ggk verify --q 2 --e 1 [--grid-cap 12] [--samples 20] [--work-limit N]
//
// Exit codes: 0 success, 1 a verification check failed, 2 invalid input.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ggk/curve.hpp"
#include "ggk/field.hpp"
#include "ggk/orderbound.hpp"
#include "ggk/report.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Common {
    ggk::Int q = 2;
    ggk::Int e = 3;
    std::string format = "csv";
    std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool with_format) {
    cmd->add_option("--q", c.q, "base field parameter (prime power >= 2)")->required();
    cmd->add_option("--e", c.e, "tower parameter (odd, >= 1)")->required();
    if (with_format) {
        cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json", "md"}));
    }
    cmd->add_option("--output", c.output, "write to this file instead of standard output");
}

// Standard output unless --output was given.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw std::invalid_argument("cannot open output file " + path);
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Order bounds for two-point AG codes on generalized Giulietti-Korchmaros curves"};
    app.require_subcommand(1);

    Common common;
    std::optional<ggk::Int> max_degree;
    std::string one_point = "axes";
    ggk::VerifyOptions verify_opts;

    auto* params = app.add_subcommand("params", "curve numerology as JSON");
    add_common(params, common, false);

    auto* table = app.add_subcommand("table", "order bound for every cell a + b <= max degree");
    add_common(table, common, true);
    table->add_option("--max-degree", max_degree, "largest divisor degree (default n_places + 2g)");

    auto* best = app.add_subcommand("best", "best two-point and one-point bound per dual dimension");
    add_common(best, common, true);
    best->add_option("--max-degree", max_degree, "largest divisor degree (default n_places + 2g)");
    best->add_option("--one-point", one_point, "one-point estimate: table axes or axis-only recursion")
        ->check(CLI::IsMember({"axes", "recursion"}));

    auto* verify = app.add_subcommand("verify", "exact small-field oracle checks");
    add_common(verify, common, false);
    verify->add_option("--grid-cap", verify_opts.grid_cap, "full grid [0, cap]^2 on small curves");
    verify->add_option("--samples", verify_opts.samples, "sampled divisors on larger curves");
    verify->add_option("--tail-rows", verify_opts.tail_rows, "best-code rows k = 1..N checked by exact distance");
    verify->add_option("--work-limit", verify_opts.work_limit, "max (field order)^(dual dim) for exact distances");
    verify->add_option("--seed", verify_opts.seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        const auto curve = ggk::new_curve(common.q, common.e);
        Sink sink(common.output);
        auto& out = sink.get();

        if (*params) {
            ggk::write_params(out, curve);
        } else if (*table) {
            const auto t = ggk::build_table(curve, max_degree);
            ggk::write_table(out, curve, t, ggk::parse_format(common.format));
        } else if (*best) {
            const auto t = ggk::build_table(curve, max_degree);
            const auto rule = one_point == "axes" ? ggk::OnePointRule::TableAxes : ggk::OnePointRule::AxisRecursion;
            ggk::write_best(out, ggk::best_rows(curve, t, rule), ggk::parse_format(common.format));
        } else if (*verify) {
            const auto report = ggk::run_verify(curve, verify_opts);
            ggk::write_verify(out, curve, report);
            return report.ok() ? 0 : kExitFailed;
        }
    } catch (const std::invalid_argument& e) {
        // InvalidParameters and FieldTooLarge derive from invalid_argument.
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return kExitFailed;
    }
    return 0;
}

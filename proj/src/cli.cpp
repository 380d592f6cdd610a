#include "hopfgl/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "CLI11.hpp"

#include "hopfgl/error.hpp"
#include "hopfgl/verify.hpp"

namespace hopfgl
{

namespace
{

enum class Format { table, records };

struct JobConfig {
    unsigned order = 5;
    unsigned max_order = 10;
    int n = 1;
    int range = 3;
    std::string law = "mishchenko-model";
    std::string instance = "beta";
    std::optional<std::string> twist_series;
    Format format = Format::table;
    unsigned threads = 0;
};

class Driver
{
public:
    Driver(const JobConfig &config, std::ostream &out) : config_(config), out_(out) {}

    int fgl_n_series()
    {
        const auto law = load_law(config_.law, config_.order);
        print(n_series(law, config_.n));
        return exit_ok;
    }

    int fgl_inverse()
    {
        print(inverse_series(load_law(config_.law, config_.order)));
        return exit_ok;
    }

    int fgl_show()
    {
        print(load_law(config_.law, config_.order).series());
        return exit_ok;
    }

    int fgl_validate()
    {
        const auto law = load_law(config_.law, config_.order);
        std::vector<VerifyRecord> records;
        for (const auto &c : validate_fgl(law).checks) {
            records.push_back({"fgl." + c.name, Json{{"law", law.name()}, {"order", law.order()}}, c.passed, c.detail});
        }
        return emit(records);
    }

    int hopf_validate()
    {
        const auto hopf = load_standalone_hopf();
        return emit(validation_records(*hopf));
    }

    int hopf_antipode()
    {
        const auto hopf = load_standalone_hopf();
        if (!hopf->valid()) {
            emit(validation_records(*hopf));
            return exit_check_failed;
        }
        print(*hopf, hopf->antipode(), "S");
        return exit_ok;
    }

    int hopf_power()
    {
        const auto hopf = load_standalone_hopf();
        if (!hopf->valid()) {
            emit(validation_records(*hopf));
            return exit_check_failed;
        }
        print(*hopf, conv_power(*hopf, config_.n), "(" + std::to_string(config_.n) + ")");
        return exit_ok;
    }

    int ext_build()
    {
        const auto setup = extension_setup();
        if (!setup) {
            return exit_check_failed;
        }
        print(canonical_extension(setup->law, setup->hopf, setup->b).body());
        return exit_ok;
    }

    int ext_twist()
    {
        const auto setup = extension_setup();
        if (!setup) {
            return exit_check_failed;
        }
        print(twist(canonical_extension(setup->law, setup->hopf, setup->b), config_.n).body());
        return exit_ok;
    }

    int ext_phi()
    {
        const auto setup = extension_setup();
        if (!setup) {
            return exit_check_failed;
        }
        print(phi_n(setup->law, setup->hopf, setup->b, config_.n).series());
        return exit_ok;
    }

    int ext_verify()
    {
        const auto setup = extension_setup();
        if (!setup) {
            return exit_check_failed;
        }
        return emit(verify_extension(setup->law, setup->hopf, setup->b, config_.range, config_.threads));
    }

    int verify_all_checks()
    {
        VerifyConfig vc;
        vc.order = config_.order;
        vc.range = config_.range;
        vc.law = config_.law;
        vc.instance = config_.instance;
        vc.twist_series = config_.twist_series;
        vc.threads = config_.threads;
        return emit(hopfgl::verify_all(vc));
    }

private:
    struct ExtensionSetup {
        FormalGroupLaw law;
        Hopf hopf;
        CoveringSeries b;
    };

    Hopf load_standalone_hopf() const { return load_hopf(config_.instance, rationals(), config_.order); }

    std::optional<ExtensionSetup> extension_setup()
    {
        auto law = load_law(config_.law, config_.order);
        auto hopf = load_hopf(config_.instance, law.ring(), config_.order);
        if (!hopf->valid()) {
            emit(validation_records(*hopf));
            return std::nullopt;
        }
        auto b = config_.twist_series ? load_twist_series(*config_.twist_series, hopf, config_.order)
                                      : default_twist_series(hopf, config_.order);
        return ExtensionSetup{std::move(law), std::move(hopf), std::move(b)};
    }

    static std::vector<VerifyRecord> validation_records(const HopfDescriptor &h)
    {
        std::vector<VerifyRecord> records;
        for (const auto &c : h.validation().checks) {
            records.push_back({"hopf.validate." + c.name,
                               Json{{"instance", h.name()}, {"generators", h.carrier()->hopf_count()}}, c.passed,
                               c.detail});
        }
        return records;
    }

    template <std::size_t Vars>
    void print(const TruncatedSeries<Vars> &s)
    {
        if (config_.format == Format::table) {
            out_ << to_string(s) << '\n';
            return;
        }
        for (const auto &rec : to_json(s)) {
            out_ << rec.dump() << '\n';
        }
    }

    void print(const HopfDescriptor &h, const AlgebraMorphism &f, const std::string &label)
    {
        const auto &carrier = h.carrier();
        for (std::size_t i = carrier->base_count(); i < carrier->size(); ++i) {
            const auto &name = carrier->generator(i).name;
            const auto &img = *f.image(i);
            if (config_.format == Format::table) {
                out_ << label << '(' << name << ") = " << to_string(img) << '\n';
            } else {
                out_ << Json{{"map", label}, {"generator", name}, {"image", to_json(img)}}.dump() << '\n';
            }
        }
    }

    int emit(const std::vector<VerifyRecord> &records)
    {
        std::size_t failed = 0;
        for (const auto &r : records) {
            failed += r.passed ? 0 : 1;
            if (config_.format == Format::records) {
                out_ << to_json(r).dump() << '\n';
                continue;
            }
            out_ << (r.passed ? "pass  " : "FAIL  ") << r.check;
            for (const auto &[key, value] : r.params.items()) {
                out_ << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
            }
            if (!r.passed) {
                out_ << "  [" << r.detail << ']';
            }
            out_ << '\n';
        }
        if (config_.format == Format::table) {
            out_ << records.size() << " checks, " << failed << " failed\n";
        }
        return failed == 0 ? exit_ok : exit_check_failed;
    }

    const JobConfig &config_;
    std::ostream &out_;
};

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Formal group laws over graded rings and Hopf algebras, in exact arithmetic", "hopfgl"};
    app.require_subcommand(1);
    JobConfig config;
    std::string format = "table";
    std::string twist_file;

    const auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--order", config.order, "Truncation order N")->capture_default_str();
        cmd->add_option("--max-order", config.max_order, "Ceiling on --order")->capture_default_str();
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "records"}))
            ->capture_default_str();
    };
    const auto add_law = [&](CLI::App *cmd) {
        cmd->add_option("--law", config.law, "additive | multiplicative | mishchenko-model | descriptor file")
            ->capture_default_str();
    };
    const auto add_instance = [&](CLI::App *cmd) {
        cmd->add_option("--instance", config.instance, "beta | trivial | descriptor file")->capture_default_str();
    };
    const auto add_twist = [&](CLI::App *cmd) { cmd->add_option("--b", twist_file, "Twist series file"); };
    const auto add_n = [&](CLI::App *cmd) { cmd->add_option("--n", config.n, "Integer n")->capture_default_str(); };
    const auto add_range = [&](CLI::App *cmd) {
        cmd->add_option("--range", config.range, "Check n, m in [-range, range]")
            ->check(CLI::Range(0, 20))
            ->capture_default_str();
        cmd->add_option("--threads", config.threads, "Worker threads (0 = hardware)")->capture_default_str();
    };

    std::function<int(Driver &)> action;
    const auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help,
                          std::function<int(Driver &)> run) {
        auto *cmd = parent->add_subcommand(name, help);
        add_common(cmd);
        cmd->callback([&action, run] { action = run; });
        return cmd;
    };

    auto *fgl = app.add_subcommand("fgl", "Formal group laws over a base ring");
    fgl->require_subcommand(1);
    {
        auto *cmd = leaf(fgl, "n-series", "Power system phi(n)", &Driver::fgl_n_series);
        add_law(cmd);
        add_n(cmd);
    }
    add_law(leaf(fgl, "inverse", "Inverse series theta", &Driver::fgl_inverse));
    add_law(leaf(fgl, "validate", "Check the formal group law axioms", &Driver::fgl_validate));
    add_law(leaf(fgl, "show", "Print F(u, v)", &Driver::fgl_show));

    auto *hopf = app.add_subcommand("hopf", "Hopf algebra structure maps");
    hopf->require_subcommand(1);
    add_instance(leaf(hopf, "antipode", "Antipode on generators", &Driver::hopf_antipode));
    {
        auto *cmd = leaf(hopf, "power", "Convolution power (n) on generators", &Driver::hopf_power);
        add_instance(cmd);
        add_n(cmd);
    }
    add_instance(leaf(hopf, "validate", "Check the Hopf algebra axioms", &Driver::hopf_validate));

    auto *ext = app.add_subcommand("ext", "Formal groups over the Hopf algebra");
    ext->require_subcommand(1);
    const auto ext_leaf = [&](const std::string &name, const std::string &help, std::function<int(Driver &)> run) {
        auto *cmd = leaf(ext, name, help, std::move(run));
        add_law(cmd);
        add_instance(cmd);
        add_twist(cmd);
        return cmd;
    };
    ext_leaf("build", "Canonical extension body", &Driver::ext_build);
    add_n(ext_leaf("twist", "Twisted extension ((n) (x) (n)) G", &Driver::ext_twist));
    add_n(ext_leaf("phi", "Covering series Phi(n)", &Driver::ext_phi));
    add_range(ext_leaf("verify", "Extension identity suite", &Driver::ext_verify));

    auto *verify = app.add_subcommand("verify", "Verification suites");
    verify->require_subcommand(1);
    {
        auto *cmd = leaf(verify, "all", "Every identity at every (m, n) cell", &Driver::verify_all_checks);
        add_law(cmd);
        add_instance(cmd);
        add_twist(cmd);
        add_range(cmd);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    if (config.order < 1 || config.order > config.max_order) {
        err << "error: --order must lie in [1, " << config.max_order << "]\n";
        return exit_usage;
    }
    config.format = format == "records" ? Format::records : Format::table;
    if (!twist_file.empty()) {
        config.twist_series = twist_file;
    }

    try {
        Driver driver(config, out);
        return action(driver);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_check_failed;
    }
}

} // namespace hopfgl

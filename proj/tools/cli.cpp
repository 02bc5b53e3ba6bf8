#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "staudt/combinatorics.hpp"
#include "staudt/json_io.hpp"

namespace staudt::cli {

using json_io::json;

ParallelFor threaded_for(unsigned jobs)
{
    if (jobs <= 1)
        return serial_for;
    return [jobs](std::size_t count, const std::function<void(std::size_t)>& body) {
        if (count < 2) {
            serial_for(count, body);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };
        const auto extra = std::min<std::size_t>(jobs, count) - 1;
        {
            std::vector<std::jthread> threads;
            for (std::size_t t = 0; t < extra; ++t)
                threads.emplace_back(worker);
            worker();
        }
        if (error)
            std::rethrow_exception(error);
    };
}

namespace {

struct Options
{
    int d = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::string field = "rationals";
    long height = kDefaultHeight;
    std::uint64_t sample = 0;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    std::string input;
    std::string output;
    bool castelnuovo = false;

    // Which flags were given.
    bool has_d = false;
    bool has_n = false;
    bool has_sample = false;
    bool has_input = false;
};

class Output
{
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_)
                throw Error("cannot open " + path + " for writing");
            stream_ = &file_;
        }
    }

    void object(const json& j) { *stream_ << j.dump(2) << '\n'; }
    void line(const json& j) { *stream_ << j.dump() << '\n'; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw Error("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void require_d(const Options& opt, const char* command)
{
    if (!opt.has_d)
        throw Error(std::string(command) + " needs --input or --d");
}

std::optional<std::uint64_t> sample_of(const Options& opt)
{
    return opt.has_sample ? std::optional<std::uint64_t>(opt.sample) : std::nullopt;
}

VonStaudtInstance load_instance(const Options& opt, const FieldSpec& field, const char* command)
{
    if (opt.has_input)
        return json_io::instance_from_json(read_json(opt.input));
    require_d(opt, command);
    return sample_instance(opt.d, field, opt.seed, opt.height);
}

/// n seeded points on the standard curve.
Configuration curve_points(const Options& opt, const FieldSpec& field, int n)
{
    const auto params = sample_params(static_cast<std::size_t>(n), field, opt.seed, opt.height);
    std::vector<ProjectivePoint> points;
    for (const auto& q : params)
        points.push_back(veronese_embed(q, opt.d));
    return Configuration(std::move(points));
}

Configuration load_configuration(const Options& opt, const FieldSpec& field, const char* command, int default_n)
{
    if (opt.has_input)
        return json_io::configuration_from_json(read_json(opt.input));
    require_d(opt, command);
    if (opt.d < 1)
        throw Error("--d must be positive");
    const int n = opt.has_n ? opt.n : default_n;
    if (n < 1)
        throw Error(std::string(command) + " needs --n");
    return curve_points(opt, field, n);
}

int gen_instance(const Options& opt, const FieldSpec& field, std::ostream& out, std::ostream& err)
{
    const auto inst = sample_instance(opt.d, field, opt.seed, opt.height);
    Output(opt.output, out).object(json_io::to_json(inst));
    err << "gen-instance: d=" << inst.d << " field=" << field.to_string() << " seed=" << opt.seed << '\n';
    return kOk;
}

int verify(const Options& opt, const FieldSpec& field, std::ostream& out, std::ostream& err)
{
    const auto inst = load_instance(opt, field, "verify");
    VerifyOptions options;
    options.castelnuovo = opt.castelnuovo;
    options.sample = sample_of(opt);
    options.sample_seed = opt.seed;
    options.parallel = threaded_for(opt.jobs);
    const auto cert = verify_instance(inst, options);
    Output(opt.output, out).object(json_io::to_json(cert));

    if (!cert.glp_ok)
        err << "diagnostic: the simplex vertices are not in general linear position\n";
    err << "verify: d=" << cert.d << " field=" << cert.field.to_string() << " glp=" << (cert.glp_ok ? "ok" : "FAIL")
        << " psi=" << cert.psi_zero << '/' << cert.psi_total;
    if (cert.castelnuovo_ok)
        err << " castelnuovo=" << (*cert.castelnuovo_ok ? "ok" : "FAIL");
    err << " verdict=" << (cert.verdict ? "true" : "false") << '\n';
    return cert.verdict ? kOk : kVerdictFalse;
}

int check_psi(const Options& opt, const FieldSpec& field, std::ostream& out, std::ostream& err)
{
    const auto config = load_configuration(opt, field, "check-psi", 0);
    WdnOptions options;
    options.sample = sample_of(opt);
    options.seed = opt.seed;
    options.parallel = threaded_for(opt.jobs);
    const auto membership = wdn_membership(config, options);

    Output sink(opt.output, out);
    std::size_t zero = 0;
    for (const auto& report : membership.reports) {
        sink.line(json_io::to_json(report));
        zero += report.value.is_zero() ? 1 : 0;
    }
    err << "check-psi: d=" << config.dim() << " n=" << config.size() << " psi=" << zero << '/'
        << membership.reports.size() << '\n';
    return membership.member ? kOk : kVerdictFalse;
}

int fit_curve(const Options& opt, const FieldSpec& field, std::ostream& out, std::ostream& err)
{
    const auto config = load_configuration(opt, field, "fit-curve", opt.d + 3);
    const auto d = static_cast<std::size_t>(config.dim());
    if (config.size() < d + 3)
        throw DimensionMismatch("fit-curve needs at least d+3 points");
    std::vector<ProjectivePoint> head(config.points().begin(), config.points().begin() + static_cast<long>(d + 3));
    const auto model = fit_rnc(Configuration(std::move(head)));
    Output(opt.output, out).object(json_io::to_json(model));

    std::size_t on_curve = 0;
    for (const auto& p : config.points())
        on_curve += curve_contains(model, p) ? 1 : 0;
    err << "fit-curve: d=" << d << " points on curve " << on_curve << '/' << config.size() << '\n';
    return on_curve == config.size() ? kOk : kVerdictFalse;
}

int sym_factorization(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto table = FactorizationTable::all(opt.d, threaded_for(opt.jobs));
    const auto subsets = subsets_of(index_range(1, 2 * opt.d + 2), static_cast<std::size_t>(opt.d + 1));
    Output sink(opt.output, out);
    std::size_t ok = 0;
    for (const auto& K : subsets) {
        const auto split = SubsetSplit::make(opt.d, K);
        const bool verified = table.verified(split.K).value_or(false);
        sink.line(json_io::factorization_record(opt.d, split, verified));
        ok += verified ? 1 : 0;
    }
    err << "sym-factorization: d=" << opt.d << " ok=" << ok << '/' << subsets.size() << '\n';
    return ok == subsets.size() ? kOk : kVerdictFalse;
}

int sym_psi(const Options& opt, std::ostream& out, std::ostream& err)
{
    const int d = opt.d;
    const int n = 2 * d + 2;
    const auto indices = opt.has_sample ? sample_psi_indices(d, n, opt.sample, opt.seed) : enumerate_psi_indices(d, n);

    std::vector<std::vector<int>> subsets;
    for (auto mask : bracket_masks(indices)) {
        std::vector<int> K;
        for (int i = 1; i <= n; ++i)
            if (mask & (std::uint64_t{1} << (i - 1)))
                K.push_back(i);
        subsets.push_back(std::move(K));
    }
    const auto parallel = threaded_for(opt.jobs);
    const auto table = FactorizationTable::for_subsets(d, subsets, parallel);

    std::vector<PsiIdentityResult> results(indices.size());
    parallel(indices.size(), [&](std::size_t i) { results[i] = verify_psi_identity(table, indices[i], d == 2); });

    Output sink(opt.output, out);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        sink.line(json_io::psi_identity_record(indices[i], results[i]));
        ok += results[i].ok ? 1 : 0;
    }
    err << "sym-psi: d=" << d << " ok=" << ok << '/' << indices.size() << '\n';
    return ok == indices.size() ? kOk : kVerdictFalse;
}

int dual_check(const Options& opt, const FieldSpec& field, std::ostream& out, std::ostream& err)
{
    const auto inst = load_instance(opt, field, "dual-check");
    const auto dual = dual_configuration(inst);
    const auto parallel = threaded_for(opt.jobs);
    const auto table = BracketTable::all(dual, parallel);
    const int n = static_cast<int>(dual.size());
    const auto indices = opt.has_sample ? sample_psi_indices(inst.d, n, opt.sample, opt.seed)
                                        : enumerate_psi_indices(inst.d, n);
    const auto membership = wdn_membership(table, indices, parallel);
    std::uint64_t zero = 0;
    for (const auto& report : membership.reports)
        zero += report.value.is_zero() ? 1 : 0;
    const bool glp = table.all_nonzero();
    const bool on_curve = glp && membership.member;

    json j{{"d", inst.d}, {"field", json_io::to_json(inst.field)}};
    j["seed"] = inst.seed ? json(*inst.seed) : json(nullptr);
    j["dual_points"] = json_io::to_json(dual)["points"];
    j["glp_ok"] = glp;
    j["psi_total"] = membership.reports.size();
    j["psi_zero"] = zero;
    j["lies_on_rnc"] = on_curve;
    Output(opt.output, out).object(j);
    err << "dual-check: d=" << inst.d << " glp=" << (glp ? "ok" : "FAIL") << " psi=" << zero << '/'
        << membership.reports.size() << " lies_on_rnc=" << (on_curve ? "true" : "false") << '\n';
    return on_curve ? kOk : kVerdictFalse;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of the generalized von Staudt theorem on rational normal curves", "vonstaudt"};
    app.require_subcommand(1);
    Options opt;

    auto add_d = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--d", opt.d, "Ambient dimension of P^d");
        if (required)
            o->required();
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", opt.seed, "Random seed");
        sub->add_option("--field", opt.field, "rationals or prime:p");
        sub->add_option("--height", opt.height, "Bound on sampled parameter entries")->check(CLI::PositiveNumber);
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };
    auto add_sample = [&](CLI::App* sub) {
        sub->add_option("--sample", opt.sample, "Check only this many seeded equations")->check(CLI::PositiveNumber);
    };
    auto add_input = [&](CLI::App* sub, const char* what) { sub->add_option("--input", opt.input, what); };
    auto add_output = [&](CLI::App* sub) { sub->add_option("--output", opt.output, "Write JSON here instead of stdout"); };

    auto* gen = app.add_subcommand("gen-instance", "Sample a von Staudt instance");
    add_d(gen, true);
    add_sampling(gen);
    add_output(gen);

    auto* ver = app.add_subcommand("verify", "Certify an instance (from --input, or sampled from --d)");
    add_input(ver, "Instance JSON file, or - for stdin");
    add_d(ver, false);
    add_sampling(ver);
    add_sample(ver);
    add_jobs(ver);
    add_output(ver);
    ver->add_flag("--castelnuovo", opt.castelnuovo, "Also fit a curve through R_1..R_{d+3}");

    auto* psi = app.add_subcommand("check-psi", "Evaluate the bracket equations on a configuration");
    add_input(psi, "Configuration JSON file, or - for stdin");
    add_d(psi, false);
    psi->add_option("--n", opt.n, "Number of points to sample on the standard curve");
    add_sampling(psi);
    add_sample(psi);
    add_jobs(psi);
    add_output(psi);

    auto* fit = app.add_subcommand("fit-curve", "Fit the rational normal curve through the first d+3 points");
    add_input(fit, "Configuration JSON file, or - for stdin");
    add_d(fit, false);
    fit->add_option("--n", opt.n, "Number of points to sample on the standard curve");
    add_sampling(fit);
    add_output(fit);

    auto* fac = app.add_subcommand("sym-factorization", "Check every simplex-vertex bracket factorization");
    add_d(fac, true);
    add_jobs(fac);
    add_output(fac);

    auto* sym = app.add_subcommand("sym-psi", "Check the bracket equations as polynomial identities");
    add_d(sym, true);
    sym->add_option("--seed", opt.seed, "Random seed for --sample");
    add_sample(sym);
    add_jobs(sym);
    add_output(sym);

    auto* dual = app.add_subcommand("dual-check", "Check that the osculating hyperplanes lie on a dual curve");
    add_input(dual, "Instance JSON file, or - for stdin");
    add_d(dual, false);
    add_sampling(dual);
    add_sample(dual);
    add_jobs(dual);
    add_output(dual);

    for (auto* sub : {ver, psi, fit, dual})
        sub->get_option("--input")->excludes(sub->get_option("--d"));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    auto* command = app.get_subcommands().front();
    opt.has_d = command->count("--d") > 0;
    opt.has_n = command->get_option_no_throw("--n") && command->count("--n") > 0;
    opt.has_sample = command->get_option_no_throw("--sample") && command->count("--sample") > 0;
    opt.has_input = command->get_option_no_throw("--input") && command->count("--input") > 0;

    try {
        const auto field = FieldSpec::parse(opt.field);
        const std::string name = command->get_name();
        if (name == "gen-instance")
            return gen_instance(opt, field, out, err);
        if (name == "verify")
            return verify(opt, field, out, err);
        if (name == "check-psi")
            return check_psi(opt, field, out, err);
        if (name == "fit-curve")
            return fit_curve(opt, field, out, err);
        if (name == "sym-factorization")
            return sym_factorization(opt, out, err);
        if (name == "sym-psi")
            return sym_psi(opt, out, err);
        return dual_check(opt, field, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace staudt::cli

#include "cohom_cli/cli.hpp"

#include <cohom/closed_form.hpp>
#include <cohom/complex.hpp>
#include <cohom/io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace cohom::cli {

Weights weights_for(const SweepKey& key)
{
    Weights w;
    if (!key.t) {
        w.lambdas.assign(key.n, Rational(1));
        w.mu = Rational(key.k + key.n);
        return w;
    }
    for (unsigned ti : key.t->entries())
        w.lambdas.push_back(Rational(-static_cast<long>(ti), 2));
    w.mu = Rational(key.k) - Rational(static_cast<long>(key.t->total()), 2);
    return w;
}

std::vector<SweepKey> sweep_keys(unsigned n, unsigned k_max)
{
    std::vector<SweepKey> keys;
    for (unsigned k = 0; k <= k_max; ++k) {
        keys.push_back({n, k, std::nullopt});
        if (k == 0 || n == 0)
            continue;
        std::vector<unsigned> t(n, 0);
        while (true) {
            keys.push_back({n, k, MultiIndex(t)});
            std::size_t i = n;
            while (i > 0 && t[i - 1] == k - 1)
                t[--i] = 0;
            if (i == 0)
                break;
            ++t[i - 1];
        }
    }
    return keys;
}

bool SweepRow::agree() const
{
    const Rational& ref = *system.dim;
    if (closed && closed->dim && *closed->dim != ref)
        return false;
    if (oracle && oracle->stable && *oracle->dim != ref)
        return false;
    return true;
}

bool SweepRow::oracle_disagrees() const
{
    return oracle && oracle->stable && *oracle->dim != *system.dim;
}

bool oracle_enabled(OracleMode mode, unsigned n, unsigned k)
{
    switch (mode) {
    case OracleMode::On:
        return true;
    case OracleMode::Off:
        return false;
    case OracleMode::Auto:
        return n <= 2 && k <= 4;
    }
    return false;
}

std::optional<Fault> find_fault(const std::vector<SweepKey>& keys)
{
    for (std::size_t row = 0; row < keys.size(); ++row) {
        const Weights w = weights_for(keys[row]);
        const LinearSystem sys = build_system(keys[row].n, keys[row].k, w.lambdas);
        const std::size_t base = rank(sys.matrix);
        for (std::size_t i = 0; i < sys.matrix.rows(); ++i)
            for (std::size_t j = 0; j < sys.matrix.cols(); ++j) {
                LinearSystem edited = sys;
                Rational& entry = edited.matrix(i, j);
                entry = entry.is_zero() ? Rational(1) : Rational(0);
                if (rank(edited.matrix) != base)
                    return Fault{row, i, j, std::move(edited)};
            }
    }
    return std::nullopt;
}

unsigned thread_count()
{
    if (const char* env = std::getenv("COHOM_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

SweepRow evaluate_row(const SweepKey& key, const SweepOptions& opts, const LinearSystem* perturbed)
{
    SweepRow row;
    row.key = key;
    row.weights = weights_for(key);
    row.tag = classify(row.weights);
    row.system = perturbed ? dim_h2_from_system(row.weights, *perturbed) : dim_h2_via_system(row.weights);
    if (opts.closed)
        row.closed = closed_form_result(row.weights);
    if (opts.summary)
        row.summary = summary_result(row.weights);
    if (oracle_enabled(opts.oracle, key.n, key.k))
        row.oracle = brute_force_h2(row.weights, opts.alpha_max);
    return row;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

std::string dim_text(const std::optional<CohomResult>& r)
{
    if (!r || !r->dim)
        return "";
    return r->dim->str();
}

} // namespace

std::vector<SweepRow> run_sweep(const std::vector<SweepKey>& keys, const SweepOptions& opts)
{
    std::optional<Fault> fault;
    if (opts.inject_fault) {
        fault = find_fault(keys);
        if (!fault)
            throw std::invalid_argument("no sweep row admits a rank-changing single-entry perturbation");
    }
    std::vector<SweepRow> rows(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
        const LinearSystem* perturbed = fault && fault->row == i ? &fault->perturbed : nullptr;
        rows[i] = evaluate_row(keys[i], opts, perturbed);
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::ostringstream os;
    os << "n,k,t,sigma,s,r,dim_system,dim_closed,dim_summary,dim_oracle,stable,agree\n";
    for (const auto& row : rows) {
        os << row.key.n << ',' << row.key.k << ',';
        if (const auto* sg = std::get_if<Singular>(&row.tag))
            os << '"' << sg->t.str() << "\"," << sg->sigma << ',' << sg->s << ',' << sg->r << ',';
        else
            os << ",,,,";
        os << row.system.dim->str() << ',' << dim_text(row.closed) << ',' << dim_text(row.summary) << ','
           << dim_text(row.oracle) << ',';
        if (row.oracle)
            os << (row.oracle->stable ? "true" : "false");
        os << ',' << (row.agree() ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows)
{
    Json out = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["n"] = row.key.n;
        j["k"] = row.key.k;
        j["case"] = to_json(row.tag);
        j["weights"] = to_json(row.weights);
        Json results = Json::array();
        results.push_back(to_json(row.system));
        for (const auto* r : {&row.closed, &row.summary, &row.oracle})
            if (*r)
                results.push_back(to_json(**r));
        j["results"] = std::move(results);
        j["agree"] = row.agree();
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<Method> parse_methods(const std::string& text)
{
    std::vector<Method> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const Method m = parse_method(text.substr(start, comma - start));
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

bool wants(const RunConfig& cfg, Method m)
{
    return std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end();
}

Weights require_weights(const RunConfig& cfg)
{
    if (cfg.lambdas.empty() || !cfg.mu)
        throw UsageError("--lambdas and --mu are required");
    if (cfg.n && *cfg.n != cfg.lambdas.size())
        throw UsageError("--n " + std::to_string(*cfg.n) + " does not match " + std::to_string(cfg.lambdas.size()) +
                         " lambdas");
    return Weights{cfg.lambdas, *cfg.mu};
}

unsigned require_n(const RunConfig& cfg)
{
    if (cfg.n)
        return *cfg.n;
    if (!cfg.lambdas.empty())
        return static_cast<unsigned>(cfg.lambdas.size());
    throw UsageError("--n is required");
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text)
{
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + cfg.out + "' for writing");
    file << text;
    file.flush();
    if (!file)
        throw IoError("failed writing '" + cfg.out + "'");
}

int cmd_dim(const RunConfig& cfg, std::ostream& out)
{
    const Weights w = require_weights(cfg);
    std::vector<CohomResult> results;
    for (Method m : cfg.methods) {
        switch (m) {
        case Method::System:
            results.push_back(dim_h2_via_system(w));
            break;
        case Method::Closed:
            results.push_back(closed_form_result(w));
            break;
        case Method::Summary:
            results.push_back(summary_result(w));
            break;
        case Method::Oracle:
            results.push_back(brute_force_h2(w, cfg.alpha_max));
            break;
        }
    }
    std::ostringstream os;
    if (cfg.format.value_or(Format::Json) == Format::Csv) {
        os << "method,dim,case,stable,alpha_max,rank,ell\n";
        for (const auto& r : results) {
            os << method_name(r.method) << ',' << (r.dim ? r.dim->str() : "") << ',' << case_name(r.tag) << ','
               << (r.stable ? "true" : "false") << ',';
            if (r.alpha_max)
                os << *r.alpha_max;
            os << ',';
            if (r.rank)
                os << *r.rank;
            os << ',';
            if (r.ell)
                os << *r.ell;
            os << '\n';
        }
    } else {
        Json j;
        j["weights"] = to_json(w);
        j["delta"] = w.delta().str();
        j["results"] = Json::array();
        for (const auto& r : results)
            j["results"].push_back(to_json(r));
        os << j.dump(2) << '\n';
    }
    emit(cfg, out, os.str());
    return kExitOk;
}

SweepOptions sweep_options(const RunConfig& cfg)
{
    SweepOptions opts;
    opts.closed = wants(cfg, Method::Closed);
    opts.summary = wants(cfg, Method::Summary);
    opts.oracle = wants(cfg, Method::Oracle) ? cfg.oracle : OracleMode::Off;
    opts.alpha_max = cfg.alpha_max;
    opts.inject_fault = cfg.inject_fault;
    return opts;
}

int cmd_table(const RunConfig& cfg, std::ostream& out)
{
    const unsigned n = require_n(cfg);
    const auto rows = run_sweep(sweep_keys(n, cfg.k_max), sweep_options(cfg));
    emit(cfg, out, cfg.format.value_or(Format::Csv) == Format::Json ? sweep_json(rows) : sweep_csv(rows));
    return kExitOk;
}

std::string row_label(const SweepRow& row)
{
    std::ostringstream os;
    os << "n=" << row.key.n << " k=" << row.key.k << ' ';
    if (row.key.t)
        os << "t=" << row.key.t->str();
    else
        os << "nonresonant";
    return os.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const unsigned n = require_n(cfg);
    const auto keys = sweep_keys(n, cfg.k_max);
    const SweepOptions opts = sweep_options(cfg);
    std::optional<Fault> fault;
    if (cfg.inject_fault)
        fault = find_fault(keys);
    const auto rows = run_sweep(keys, opts);

    std::size_t oracle_rows = 0, unstable = 0, gate_failures = 0, closed_mismatch = 0, summary_mismatch = 0;
    Json disagreements = Json::array();
    std::ostringstream text;
    text << "# verify n=" << n << " k_max=" << cfg.k_max << " rows=" << rows.size() << '\n';
    if (fault)
        text << "# injected fault: " << row_label(rows[fault->row]) << " entry (" << fault->i << ',' << fault->j
             << ")\n";
    for (const auto& row : rows) {
        const std::string sys = row.system.dim->str();
        auto record = [&](const char* kind, const char* other, const std::string& value) {
            text << kind << ' ' << other << "/system " << row_label(row) << " system=" << sys << ' ' << other << '='
                 << value << '\n';
            disagreements.push_back({{"kind", kind},
                                     {"method", other},
                                     {"row", row_label(row)},
                                     {"system", sys},
                                     {"value", value}});
        };
        if (row.oracle) {
            ++oracle_rows;
            if (!row.oracle->stable) {
                ++unstable;
                record("unstable", "oracle", row.oracle->note);
            } else if (row.oracle_disagrees()) {
                ++gate_failures;
                record("disagree", "oracle", row.oracle->dim->str());
            }
        }
        if (row.closed && row.closed->dim && *row.closed->dim != *row.system.dim) {
            ++closed_mismatch;
            record("mismatch", "closed", row.closed->dim->str());
        }
        if (row.summary && row.summary->dim && *row.summary->dim != *row.system.dim) {
            ++summary_mismatch;
            record("mismatch", "summary", row.summary->dim->str());
        }
    }
    const bool pass = gate_failures == 0;
    std::ostringstream os;
    if (cfg.format.value_or(Format::Csv) == Format::Json) {
        Json j{{"n", n},
               {"k_max", cfg.k_max},
               {"rows", rows.size()},
               {"oracle_rows", oracle_rows},
               {"unstable", unstable},
               {"gate_failures", gate_failures},
               {"closed_mismatches", closed_mismatch},
               {"summary_mismatches", summary_mismatch},
               {"pass", pass},
               {"discrepancies", std::move(disagreements)}};
        if (fault)
            j["injected_fault"] = {{"row", row_label(rows[fault->row])}, {"i", fault->i}, {"j", fault->j}};
        os << j.dump(2) << '\n';
    } else {
        os << text.str() << "# rows=" << rows.size() << " oracle_rows=" << oracle_rows << " unstable=" << unstable
           << " gate_failures=" << gate_failures << " closed_mismatches=" << closed_mismatch
           << " summary_mismatches=" << summary_mismatch << '\n'
           << "# result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    emit(cfg, out, os.str());
    return pass ? kExitOk : kExitDisagreement;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Weights w = require_weights(cfg);
    if (!w.delta_natural()) {
        err << "H\xC2\xB2=0, empty basis\n";
        emit(cfg, out, "[]\n");
        return kExitOk;
    }
    Json j = Json::array();
    for (const auto& f : cocycle_basis(w))
        j.push_back(to_json(f));
    emit(cfg, out, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_system(const RunConfig& cfg, std::ostream& out)
{
    const Weights w = require_weights(cfg);
    const auto k = w.delta_natural();
    if (!k)
        throw UsageError("delta = " + w.delta().str() + " is not a natural number; there is no system");
    emit(cfg, out, system_csv(build_system(static_cast<unsigned>(w.n()), *k, w.lambdas)));
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Second differential cohomology of sl(2) acting on n-ary differential operators", "cohom"};
    app.require_subcommand(1, 1);

    struct Raw {
        std::optional<unsigned> n;
        std::string lambdas, mu, methods, out, format, oracle = "auto";
        unsigned k_max = 0;
        std::optional<unsigned> alpha_max;
        bool inject_fault = false;
    } raw;

    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--n", raw.n, "Arity n");
        sub->add_option("--lambdas", raw.lambdas, "Comma-separated rationals lambda_1..lambda_n");
        sub->add_option("--mu", raw.mu, "Rational mu");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", raw.out, "Output path (default: standard output)");
        sub->add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_methods = [&](CLI::App* sub) {
        sub->add_option("--methods", raw.methods, "Subset of closed,summary,system,oracle");
        sub->add_option("--alpha-max", raw.alpha_max, "Oracle truncation |alpha| <= N (default k+3)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--oracle", raw.oracle, "auto (n<=2, k<=4), on or off")
            ->check(CLI::IsMember({"auto", "on", "off"}));
    };
    auto add_sweep = [&](CLI::App* sub) {
        sub->add_option("--k-max", raw.k_max, "Largest k in the sweep");
        sub->add_flag("--inject-fault", raw.inject_fault, "Perturb one system matrix entry (negative control)");
    };

    CLI::App* dim = app.add_subcommand("dim", "dim H^2 for one (lambdas, mu)");
    add_weights(dim);
    add_methods(dim);
    add_output(dim);
    CLI::App* table = app.add_subcommand("table", "Sweep report over k <= k-max");
    add_weights(table);
    add_methods(table);
    add_sweep(table);
    add_output(table);
    CLI::App* verify = app.add_subcommand("verify", "Cross-check methods over a sweep");
    add_weights(verify);
    add_methods(verify);
    add_sweep(verify);
    add_output(verify);
    CLI::App* basis = app.add_subcommand("basis", "Cocycle basis as JSON");
    add_weights(basis);
    add_output(basis);
    CLI::App* system = app.add_subcommand("system", "The linear system for delta = k as CSV");
    add_weights(system);
    add_output(system);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "cohom: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        RunConfig cfg;
        CLI::App* chosen = app.get_subcommands().front();
        const std::string name = chosen->get_name();
        cfg.command = name == "dim"      ? Command::Dim
                    : name == "table"    ? Command::Table
                    : name == "verify"   ? Command::Verify
                    : name == "basis"    ? Command::Basis
                                         : Command::System;
        cfg.n = raw.n;
        if (!raw.lambdas.empty())
            cfg.lambdas = parse_rational_list(raw.lambdas);
        if (!raw.mu.empty())
            cfg.mu = Rational::parse(raw.mu);
        cfg.k_max = raw.k_max;
        cfg.alpha_max = raw.alpha_max;
        cfg.out = raw.out;
        if (!raw.format.empty())
            cfg.format = raw.format == "csv" ? Format::Csv : Format::Json;
        cfg.oracle = raw.oracle == "on" ? OracleMode::On : raw.oracle == "off" ? OracleMode::Off : OracleMode::Auto;
        cfg.inject_fault = raw.inject_fault;
        if (!raw.methods.empty()) {
            cfg.methods = parse_methods(raw.methods);
        } else if (cfg.command == Command::Dim) {
            cfg.methods = {Method::System, Method::Closed};
            const Weights w = require_weights(cfg);
            if (oracle_enabled(cfg.oracle, static_cast<unsigned>(w.n()), w.delta_natural().value_or(0)))
                cfg.methods.push_back(Method::Oracle);
        } else {
            cfg.methods = {Method::System, Method::Closed, Method::Summary, Method::Oracle};
        }
        if (cfg.command == Command::Dim && cfg.oracle == OracleMode::Off)
            std::erase(cfg.methods, Method::Oracle);

        switch (cfg.command) {
        case Command::Dim:
            return cmd_dim(cfg, out);
        case Command::Table:
            return cmd_table(cfg, out);
        case Command::Verify:
            return cmd_verify(cfg, out);
        case Command::Basis:
            return cmd_basis(cfg, out, err);
        case Command::System:
            return cmd_system(cfg, out);
        }
    } catch (const IoError& e) {
        err << "cohom: " << e.what() << '\n';
        return kExitIo;
    } catch (const UsageError& e) {
        err << "cohom: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "cohom: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace cohom::cli

#pragma once

#include <cohom/case_tag.hpp>
#include <cohom/density.hpp>
#include <cohom/reduced.hpp>
#include <cohom/result.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cohom::cli {

enum class Command { Dim, Table, Verify, Basis, System };
enum class Format { Json, Csv };
enum class OracleMode { Auto, On, Off };

struct RunConfig {
    Command command = Command::Dim;
    std::optional<unsigned> n;
    std::vector<Rational> lambdas;
    std::optional<Rational> mu;
    unsigned k_max = 0;
    std::optional<unsigned> alpha_max;
    std::vector<Method> methods;
    std::string out; // empty: standard output
    std::optional<Format> format;
    OracleMode oracle = OracleMode::Auto;
    bool inject_fault = false;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// One sweep instance: the nonresonant row (lambda_i = 1) when t is empty,
/// otherwise lambda_i = -t_i / 2.
struct SweepKey {
    unsigned n = 0;
    unsigned k = 0;
    std::optional<MultiIndex> t;
};

[[nodiscard]] Weights weights_for(const SweepKey& key);

/// For k = 0..k_max: the nonresonant row, then every t in {0..k-1}^n in
/// ascending lexicographic order.
[[nodiscard]] std::vector<SweepKey> sweep_keys(unsigned n, unsigned k_max);

struct SweepRow {
    SweepKey key;
    Weights weights;
    CaseTag tag;
    CohomResult system;
    std::optional<CohomResult> closed;
    std::optional<CohomResult> summary;
    std::optional<CohomResult> oracle;
    /// closed and stable oracle values, when present, equal the system value.
    [[nodiscard]] bool agree() const;
    /// The verify gate: a stable oracle value that differs from the system.
    [[nodiscard]] bool oracle_disagrees() const;
};

struct SweepOptions {
    bool closed = true;
    bool summary = true;
    OracleMode oracle = OracleMode::Auto;
    std::optional<unsigned> alpha_max;
    bool inject_fault = false;
};

/// Whether the oracle runs on a row: always/never for On/Off; for Auto
/// when n <= 2 and k <= 4.
[[nodiscard]] bool oracle_enabled(OracleMode mode, unsigned n, unsigned k);

/// The first key whose system admits a single-entry edit that changes its
/// rank, and that edit applied. Used as a negative control.
struct Fault {
    std::size_t row = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    LinearSystem perturbed;
};
[[nodiscard]] std::optional<Fault> find_fault(const std::vector<SweepKey>& keys);

/// Evaluates rows concurrently (COHOM_THREADS caps the pool); the result
/// is in key order regardless of completion order.
[[nodiscard]] std::vector<SweepRow> run_sweep(const std::vector<SweepKey>& keys, const SweepOptions& opts);

[[nodiscard]] std::string sweep_csv(const std::vector<SweepRow>& rows);
[[nodiscard]] std::string sweep_json(const std::vector<SweepRow>& rows);

/// Worker count from COHOM_THREADS, else the hardware concurrency.
[[nodiscard]] unsigned thread_count();

/// Parses and executes a command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cohom::cli

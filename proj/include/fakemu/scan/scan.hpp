#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fakemu/analysis/residues.hpp"
#include "fakemu/core/epsilon.hpp"
#include "fakemu/core/sieve.hpp"
#include "fakemu/factor/factorize.hpp"

namespace fakemu {

struct ScanRecord {
    std::int64_t x = 0;
    std::int64_t F = 0;
    double G = 0;
    double E = 0;
    double e_norm = 0;
    double env_lo = std::numeric_limits<double>::quiet_NaN();
    double env_hi = std::numeric_limits<double>::quiet_NaN();
};

// e_norm = E / (x^{1/(2l)} (log x)^{log_power}), log x read as 1 for x < 3.
struct Normalization {
    int denominator = 2;  // 2l
    int log_power = 0;    // |a_l| - 1
};
Normalization normalization(const ZetaFactorization& fz);
double normalization_scale(const Normalization& norm, double x);

// Reference curves with user-chosen constants:
// env_lo = x^{1/(2k)} exp(C log x / log log x), k the initial index;
// env_hi = x^{1/l} exp(-c (log x)^{3/5} / (log log x)^{1/5}), l the critical index.
// log log x is clipped below at 1.
struct EnvelopeConstants {
    double c = 1;
    double C = 1;
};
std::pair<double, double> envelopes(const EnvelopeConstants& k, int initial_index, int critical_index, double x);

struct ScanOptions {
    int grid_points = 1000;               // geometric grid on [2, x_max]
    std::size_t max_refined = 100000;     // sign-change neighbourhood records kept
    std::optional<EnvelopeConstants> envelope;
    SieveOptions sieve;
};

struct ScanResult {
    std::vector<ScanRecord> records;  // increasing x
    std::int64_t sign_change_count = 0;  // flips of E over every integer 2..x_max
    bool truncated = false;              // some flips were counted but not recorded
    Normalization norm;
};

// Streams F over [1, x_max] and records E = F - G on the grid plus both
// integers around every strict sign flip of E (zero carries no sign).
// Throws BudgetExceeded past the sieve limit, InvalidArgument for x_max < 2.
ScanResult scan(const EpsilonSequence& eps, const ZetaFactorization& fz, const MainTermModel& model,
                std::int64_t x_max, const ScanOptions& options = {});

std::vector<std::int64_t> geometric_grid(std::int64_t x_max, int points);

// Adjacent (by x, skipping E == 0) record pairs with E of opposite sign.
std::vector<std::pair<std::int64_t, std::int64_t>> sign_changes(const std::vector<ScanRecord>& records);

struct Extrema {
    double sup_norm;
    double inf_norm;
    std::int64_t arg_sup;
    std::int64_t arg_inf;
};
// Throws InvalidArgument on empty input.
Extrema extrema(const std::vector<ScanRecord>& records);

// Header x,F,G,E,e_norm (plus env_lo,env_hi when `with_envelope`), 12
// significant digits.
std::string to_csv(const std::vector<ScanRecord>& records, bool with_envelope = false);
// Throws Error("io_error") when the file cannot be written.
void export_csv(const std::vector<ScanRecord>& records, const std::string& path, bool with_envelope = false);
std::vector<ScanRecord> parse_csv(const std::string& text);

}  // namespace fakemu

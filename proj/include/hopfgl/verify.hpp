#ifndef HOPFGL_VERIFY_HPP
#define HOPFGL_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfgl/io.hpp"

namespace hopfgl
{

// One verified identity at one parameter cell.
struct VerifyRecord {
    std::string check;
    Json params;
    bool passed = false;
    std::string detail;
};

// {"check": ..., "params": {...}, "status": "pass"|"fail", "detail": ...}
Json to_json(const VerifyRecord &r);

struct VerifyConfig {
    unsigned order = 5;
    int range = 3;
    // Law used for the Hopf extension suite; the ordinary law suite always
    // covers the three built-in laws plus this one if it is a file.
    std::string law = "mishchenko-model";
    std::string instance = "beta";
    // Twist series document; the default b = x + b1 x^2 + ... otherwise.
    std::optional<std::string> twist_series;
    // Independent cells are evaluated on this many threads; output order
    // does not depend on it.
    unsigned threads = 0;
};

// Closed form (1 + x)^n - 1 over Q, for any integer n.
Series1 binomial_power_series(int n, unsigned order);

std::vector<VerifyRecord> verify_law(const FormalGroupLaw &law, int range);
std::vector<VerifyRecord> verify_hopf(const Hopf &hopf, int range);
std::vector<VerifyRecord> verify_extension(const FormalGroupLaw &law, const Hopf &hopf, const CoveringSeries &b,
                                           int range, unsigned threads = 0);

// All three suites. Throws (ParseError, PreconditionError, ...) when the
// configured instances cannot be built.
std::vector<VerifyRecord> verify_all(const VerifyConfig &config);

} // namespace hopfgl

#endif

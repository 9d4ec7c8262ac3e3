#ifndef INTERFERO_VALIDATE_HPP
#define INTERFERO_VALIDATE_HPP

#include <functional>
#include <string>
#include <vector>

// Self-validation suite: every cross-route identity, oracle-equivalence and
// structure check the library rests on, executed with explicit thresholds
// and reported in a machine-readable form.

namespace interfero::validate {

enum class Profile {
    standard,  // "default": closed-vs-oracle gates at 1e-4 with gamma/alpha = 0.1
    strict,    // tightens the oracle gates to 1e-6 at gamma/alpha = 0.05
};

Profile profile_from_string(const std::string& name);
const char* profile_name(Profile p);

struct Check {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    std::string comparison;  // "<", ">", "=="
    bool pass = false;
};

struct Report {
    std::string profile;
    std::vector<Check> checks;

    int total() const { return static_cast<int>(checks.size()); }
    int passed() const;
    bool all_pass() const { return passed() == total(); }
    std::string to_json() const;
};

// Fault-injection points for exercising the report machinery itself; when
// a hook is set the corresponding check consumes it instead of the library
// routine.
struct Hooks {
    std::function<double(int, double)> details_factor;
};

Report run(Profile profile, const Hooks* hooks = nullptr);

}  // namespace interfero::validate

#endif  // INTERFERO_VALIDATE_HPP

#pragma once

#include "hypconv/g_landscape.hpp"
#include "hypconv/phi_series.hpp"
#include "hypconv/piecewise.hpp"

#include <array>

namespace hypconv {

struct ConditionResult {
    int id = 0;  // 1..7
    bool applicable = false;
    bool satisfied = true;  // vacuously true when not applicable
    std::vector<std::string> witnesses;
    friend bool operator==(const ConditionResult&, const ConditionResult&) = default;
};

enum class LimitKind { Zero, ConstantH0Q0, SeriesGlimzn };

struct Verdict {
    bool uniform = false;
    bool sufficient_shortcut = false;  // D0 < 0 or D0* < 0 settled the question
    std::array<ConditionResult, 7> conditions;
    std::optional<LimitKind> limit;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict decide(const ProperTerm& term);

struct LimitValue {
    LimitKind kind;
    cdouble value;
    double error_bound = 0;
    std::string symbolic;
};

// Requires decide(term).uniform.
LimitValue limit_series(const ProperTerm& term, double tol = 1e-10);

std::string to_string(LimitKind k);
const char* roman(int id);

}  // namespace hypconv

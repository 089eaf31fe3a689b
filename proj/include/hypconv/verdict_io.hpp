#pragma once

#include "hypconv/decision.hpp"

#include <string>

namespace hypconv {

std::string verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const std::string& text);
std::string verdict_to_text(const Verdict& v);

}  // namespace hypconv

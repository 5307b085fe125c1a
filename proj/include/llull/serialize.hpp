#pragma once

// JSON and aligned-text renderings. Rationals always appear as "num/den".

#include <string>
#include <string_view>

#include <json.hpp>

#include "llull/ballots.hpp"
#include "llull/methods.hpp"

namespace llull {

/// {"options": [...], "matrix": [[null, "1/2", ...], ...]}
nlohmann::json matrix_to_json(const LlullMatrix& m);
/// Accepts the layout of matrix_to_json; diagonal cells may be null or
/// anything. Throws ParseError.
LlullMatrix matrix_from_json(const nlohmann::json& j);
LlullMatrix read_matrix_file(const std::string& path);

nlohmann::json scores_to_json(const std::vector<std::string>& options, const ScoreVectors& s);

std::string matrix_to_text(const LlullMatrix& m);
std::string scores_to_text(const std::vector<std::string>& options, const ScoreVectors& s);

nlohmann::json result_to_json(const MethodResult& r);
std::string result_to_text(const MethodResult& r);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace llull

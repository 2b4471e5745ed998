#pragma once

#include "cox/checker.hpp"

#include "json.hpp"

namespace cox {

// Reports are byte-stable: keys sorted (nlohmann std::map backing), all
// numerics either integers or rationals-as-strings, no floats.
inline constexpr const char* kVersion = "0.1.0";

nlohmann::json q_json(const Q& q); // {"decimal": "...", "den": "...", "num": "..."}

nlohmann::json to_json(const EndsEstimate& est);
nlohmann::json to_json(const WallCertificate& cert);
nlohmann::json to_json(const CrossingEntry& entry);
nlohmann::json to_json(const CrossingReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const IntersectionProfile& profile);
nlohmann::json to_json(const ReflectionReport& report);
nlohmann::json to_json(const PaperExamplesReport& report);

nlohmann::json make_document(const std::string& command, const nlohmann::json& input,
                             const nlohmann::json& parameters, const nlohmann::json& results,
                             const std::vector<std::string>& warnings,
                             const std::vector<std::string>& errors);

// Full `paper-examples` document; used by the CLI and the acceptance suite.
nlohmann::json paper_examples_document();

std::string dump_document(const nlohmann::json& doc);

} // namespace cox

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "tdual/dualgroup.hpp"

namespace tdual::io {

using Json = nlohmann::ordered_json;

// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json to_json(const Int& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const Rat& x);  // [num, den]
Json to_json(const RatMatrix& m);

Json root_datum_to_json(const RootDatum& rd);
// Throws UsageError naming the offending field; validates the datum.
RootDatum root_datum_from_json(const Json& j);

// The root datum is stored inline under "root_datum" when requested.
Json qform_to_json(const QForm& q, bool embed_datum = false);
// A "root_datum" entry (inline object or path relative to base_dir) takes
// precedence over fallback.
QForm qform_from_json(const Json& j, const RootDatum* fallback, const std::filesystem::path& base_dir = {});

Json twisted_dual_to_json(const TwistedDual& td);

Json parse(const std::string& text, const std::string& origin);
Json load(const std::filesystem::path& path);
RootDatum load_root_datum(const std::filesystem::path& path);
QForm load_qform(const std::filesystem::path& path, const RootDatum* fallback);
void save(const std::filesystem::path& path, const Json& j);

}  // namespace tdual::io

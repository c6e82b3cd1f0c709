#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "hart/derived.hpp"
#include "hart/tau.hpp"

namespace hart {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Dot, Text };

struct RunConfig {
    std::size_t length_cap = kDefaultLengthCap;
    std::size_t layer_cap = kDefaultLayerCap;
    Window window;
    std::uint64_t seed = kDefaultSeed;
    OutputFormat format = OutputFormat::Text;
};

// HART_LENGTH_CAP and HART_LAYER_CAP override the caps when set.
// Errors: ConfigError (non-positive or malformed value).
RunConfig apply_env(RunConfig c);
// "lo:hi" with lo <= hi. Errors: ConfigError.
Window parse_window(const std::string& s);
OutputFormat parse_format(const std::string& s);

// Parses JSON text; syntax errors become Error("ParseError") with
// "<source>:<line>:<col>" in the message.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
// Pretty-printed with a trailing newline; key order is insertion order.
std::string dump(const Json& j);

// Presentation JSON:
//   {"vertices":[...], "arrows":[{"name","from","to"}],
//    "relations":[{"terms":[{"coef":"p/q","path":["a","b"]}]}],
//    "tau":{"x":"y"}, "length_cap": 64}
// Paths list arrows in traversal order. "name", "description" and
// "length_cap" are optional. Errors: SchemaError.
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);
// Optional "length_cap" of an algebra file, else `fallback`.
std::size_t length_cap_of(const Json& j, std::size_t fallback);

// Module JSON: {"dims":{vertex:count}, "maps":{arrow:[[p/q,...],...]}}.
// Missing vertices have dimension 0, missing arrows act by zero.
// Errors: SchemaError, InvalidModule (relations not satisfied).
Json to_json(const Representation& x);
Representation representation_from_json(const Json& j, const AlgebraPtr& a);

// Solid edges for arrows, dashed edges x -> tau(x); vertices in
// lexicographic order, edges sorted by endpoint names.
std::string to_dot(const Presentation& p, const std::string& graph_name = "Q");

Json to_json(const Fingerprint& f);
// Layers of fingerprints; module matrices when `with_modules`.
Json to_json(const TauClosure& c, bool with_modules = false);
Json to_json(const CompletenessReport& r);
// "absolutely n-complete", "n-complete; not absolute; P(M) = add T" or
// "not n-complete: <reason>".
std::string verdict(const CompletenessReport& r);
Json to_json(const UClosure& u, const WindowReport& w);

}  // namespace hart

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "dinitz/lists.hpp"

namespace dinitz {

class InstanceParseError : public std::runtime_error {
public:
    explicit InstanceParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses {"r": R, "n": N, "lists": [[[sym, ...], ...], ...]} where lists
/// is an r x n array of non-empty symbol arrays. Symbols are integers or
/// strings; one document must not mix the two.
ListAssignment parse_instance_json(const std::string& text);
ListAssignment load_instance_file(const std::filesystem::path& path);

/// Canonical serialization: key order r, n, lists; each list sorted and
/// deduplicated. Parsing then re-serializing is idempotent.
std::string canonical_instance_json(const ListAssignment& lists);

/// A candidate rectangle: either a bare 2-D array of symbols or an object
/// with a "rectangle" field holding one.
SymbolGrid parse_candidate_json(const std::string& text);
SymbolGrid load_candidate_file(const std::filesystem::path& path);

}  // namespace dinitz

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperfactor/hypergraph.hpp"

namespace hyperfactor {

enum class Format { Text, Json };

/// Line format:
///
///     hypergraph <n> <m>
///     e <v1> <v2> ... <vk>      (m lines, ascending ids)
///
/// Lines starting with '#' are comments and may appear anywhere. Blank lines
/// are ignored. Throws ParseError.
Hypergraph parse_text(std::string_view text);

/// {"n": <int>, "edges": [[...], ...]}; edges need ascending ids.
Hypergraph parse_json(std::string_view text);

/// Dispatches on the first non-blank character ('{' selects JSON).
Hypergraph parse_any(std::string_view text);

/// Canonical writer: edges in lexicographic order, LF endings. Every line of
/// `comment` is emitted as a leading "# ..." line.
std::string to_text(const Hypergraph& h, std::string_view comment = {});
std::string to_json_text(const Hypergraph& h);
std::string write(const Hypergraph& h, Format format, std::string_view comment = {});

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
Hypergraph load(const std::filesystem::path& path);
void save(const std::filesystem::path& path, const Hypergraph& h, Format format,
          std::string_view comment = {});

}  // namespace hyperfactor

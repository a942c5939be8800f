#ifndef SPTRI_IO_HPP
#define SPTRI_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "sptri/complex.hpp"
#include "sptri/permutation.hpp"

namespace sptri {
namespace io {

/// A complex together with its optional metadata, as carried by the JSON
/// format.
struct NamedComplex {
    std::string name;
    SimplicialComplex complex;
    std::optional<Coloring> coloring;
    std::optional<VertexMap> involution;
};

enum class Format { plain, json };

Format format_from_string(const std::string& s);
std::string to_string(Format f);

/// Plain canonical format: one facet per line, vertices space-separated and
/// sorted, facets sorted, '#' starts a comment.  Carries no metadata.
std::string write_plain(const NamedComplex& nc);
/// JSON canonical format: name, sorted vertex list, sorted facet list,
/// optional coloring and involution maps.
std::string write_json(const NamedComplex& nc);
std::string write(const NamedComplex& nc, Format format);

/// Parsers; throw MalformedInputError (with a line number for plain input).
NamedComplex read_plain(const std::string& text, const std::string& name = "");
NamedComplex read_json(const std::string& text);
NamedComplex read(const std::string& text, Format format);

NamedComplex read_file(const std::string& path);
void write_file(const std::string& path, const NamedComplex& nc, Format format);

/// FNV-1a 64-bit content digest, rendered as 16 hex digits.
std::string digest(const std::string& content);

} // namespace io
} // namespace sptri

#endif

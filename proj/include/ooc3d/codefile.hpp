// On-disk form of a code: a versioned structured-text document with a
// fixed key order, so identical codes serialize to identical bytes, plus
// a flat CSV export of the pulse triples.

#pragma once

#include <string>

#include "ooc3d/codes.hpp"

namespace ooc3d {

inline constexpr const char* kCodeFileFormat = "ooc3d-code";
inline constexpr int kCodeFileVersion = 1;

// Keys are emitted in a fixed order and pulse lists exactly as stored;
// constructions and the loader both keep them sorted, so serialization
// is canonical end to end.
std::string to_structured_text(const Code& code);
void save_structured_text(const Code& code, const std::string& path);

// Parse and validate: format and version tags, positive dimensions,
// in-range sorted distinct pulse triples, a nonempty codeword list, and
// a header size equal to the codeword count.  Claimed weight and
// correlation values are loaded as-is; checking them is the verifier's
// job.  Throws std::runtime_error naming the violated invariant.
Code from_structured_text(const std::string& text);
Code load_structured_text(const std::string& path);

// "codeword,wavelength,space,time" header, then one pulse per row.
std::string to_csv(const Code& code);
void save_csv(const Code& code, const std::string& path);

}  // namespace ooc3d

#pragma once

#include <string>

#include "ellpic/forge.hpp"

namespace ellpic {

/// UTF-8 JSON rendering with fixed field names and ordering:
/// {version, base, tower_height, kill_generators, removed_points,
///  sigma_stable, target, axioms, transcript, demo?}.
/// Large integers are serialized as decimal strings.
std::string certificate_to_json(const Certificate& c);

/// Parse a certificate. Throws std::invalid_argument on malformed input or an
/// unknown version.
Certificate certificate_from_json(const std::string& text);

void save_certificate(const Certificate& c, const std::string& path);
Certificate load_certificate(const std::string& path);

}  // namespace ellpic

#pragma once

#include <string>

#include "vcsys/set_system.hpp"

namespace vcsys {

// `.ssys` text format (UTF-8, line oriented, `#` starts a comment):
//   domain: e1 e2 ... en
//   concept NAME: e_i e_j ...      (or `-` for the empty set)
// Concept names must be unique; identical contents under different
// names are rejected.  Errors carry line and column.
SetSystem parse_ssys(const std::string& text, Caps caps = {});
std::string serialize_ssys(const SetSystem& system);

// `.mat` matrix format:
//   concepts=<m> elements=<n>
// followed by m lines of n characters over {0,1}; column j is domain
// position j.  Parsing generates element identifiers x1..xn.
SetSystem parse_mat(const std::string& text, Caps caps = {});
std::string serialize_mat(const SetSystem& system);

// Dispatches on the first significant line: `domain:` means ssys,
// `concepts=` means mat.
SetSystem parse_auto(const std::string& text, Caps caps = {});

}  // namespace vcsys

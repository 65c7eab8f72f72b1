#pragma once

#include "supersat/permfam.hpp"
#include "supersat/setfam.hpp"

#include <iosfwd>
#include <string>

namespace supersat {

// Family file: header line "n k", then one set per line as comma-separated
// increasing elements.  Blank lines and '#' comments are ignored.
SetFamily read_family(std::istream& in);
SetFamily read_family_file(const std::string& path);
void write_family(std::ostream& out, const SetFamily& f);
void write_family_file(const std::string& path, const SetFamily& f);

// Permutation file: header "n", one permutation per line as
// space-separated images.
PermFamily read_perm_family(std::istream& in);
PermFamily read_perm_family_file(const std::string& path);
void write_perm_family(std::ostream& out, const PermFamily& f);
void write_perm_family_file(const std::string& path, const PermFamily& f);

// Coset spec file: header "n", then lines "i j".
CosetSpec read_coset_spec(std::istream& in);
CosetSpec read_coset_spec_file(const std::string& path);
void write_coset_spec(std::ostream& out, const CosetSpec& spec);

} // namespace supersat

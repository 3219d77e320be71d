#pragma once

#include <string>

#include <json.hpp>

#include "crystal/graded.hpp"
#include "crystal/groups.hpp"
#include "crystal/pairing.hpp"

namespace crystal {

using json = nlohmann::ordered_json;

// Scalars travel as strings: "3" for residues and integers, "2/7" for
// reduced fractions.

// {"field":{"char":p}, "dim":d, "basis":[labels],
//  "mult":[[i,j,k,"c"],...]           e_i e_j contains c e_k,
//  "unit":[[k,"c"],...],
//  "comult":[[i,j,k,"c"],...]         Delta(e_i) contains c e_j (x) e_k,
//  "counit":[[i,"c"],...],
//  "antipode":[[i,j,"c"],...] | null  S(e_i) contains c e_j}
json hopf_to_json(const HopfAlgebra& H);
HopfAlgebra hopf_from_json(const json& j);

// {"order":n,"table":[[...]],"labels":[...]} or
// {"perm_generators":[[...]],"degree":m} or
// {"family":name, ...} with families trivial, cyclic {"n"},
// Zp_powers {"p","exponents"}, Zp_semidirect_Zp2 {"p"}, dihedral {"n"},
// symmetric {"n"}, quaternion.
FiniteGroup group_from_json(const json& j);

// {"left":"file","right":"file","matrix":[["c",...],...]}; the side files
// are resolved against base_dir.
PairingData pairing_from_json(const json& j, const std::string& base_dir);

json subspace_to_json(const Subspace& S);
json filtration_to_json(const Filtration& F);
json laurent_to_json(const LaurentModule& M);
json presentation_to_json(const PresentationReport& R);
json lie_to_json(const RestrictedLieBialgebra& L);
json validation_to_json(const ValidationReport& R);

// Read and parse; format_error on I/O or syntax problems.
json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

} // namespace crystal

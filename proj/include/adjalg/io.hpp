#pragma once

/**
 * @file io.hpp
 * @brief JSON (de)serialization for every object the tools exchange.
 *
 * All writers emit key-ordered JSON so that identical inputs produce
 * byte-identical files.  Scalars serialize as
 * {"order": n, "coeffs": [["p","q"], ...]} with one decimal-string
 * pair per power-basis coordinate; on input the shorthand forms
 * "zeta(n,k)", "q*zeta(n,k)", "-zeta(n,k)", plain integers and
 * rational strings like "3/4" are accepted as well.
 *
 * Malformed shapes, unknown labels, and unparsable numbers raise
 * InputError with the offending field; mathematically broken but
 * well-formed content (a singular antipode, say) raises CheckError.
 */

#include <string>
#include <vector>

#include "json.hpp"

#include "adjalg/cocycle.hpp"
#include "adjalg/comodalg.hpp"
#include "adjalg/group.hpp"
#include "adjalg/hopf.hpp"

namespace adjalg {

using Json = nlohmann::ordered_json;

/* scalars */
Json scalar_to_json(const Cyc& c);
Cyc scalar_from_json(const Json& j);

/* dense matrices as row lists, sparse ones as [row, col, scalar] triples */
Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);
Json matrix_to_triples(const Mat& m);
Mat matrix_from_triples(const Json& j, int rows, int cols);
Json vector_to_json(const Vec& v);
Vec vector_from_json(const Json& j);

/* groups: {"labels": [...], "cayley": [[...]]} on output; a
   {"degree": d, "generators": [[...], ...]} permutation form is also
   accepted on input */
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/* cocycles: {"subgroup": [labels], "values": [[scalar, ...], ...]},
   rows and columns indexed by the subgroup sorted by group index; the
   string "trivial" in place of the table means the constant 1 */
Json cocycle_to_json(const TwoCocycle& psi);
TwoCocycle cocycle_from_json(const Json& j, const FiniteGroup& g);

/* projective representations: {"field_order": n, "matrices": {label: matrix}} */
Json rep_to_json(const ProjectiveRep& v, const TwoCocycle& psi);
ProjectiveRep rep_from_json(const Json& j, const FiniteGroup& g,
                            const std::vector<int>& subgroup_elems);

/* Hopf data: {"dim", "labels", "mult", "comult", "counit", "antipode"}
   with sparse products and a dense antipode; "unit" is written too and
   solved for when absent */
Json hopf_to_json(const HopfData& h);
HopfData hopf_from_json(const Json& j);

/* comodule algebras mirror the Hopf format plus "coaction" triples */
Json comodule_algebra_to_json(const ComoduleAlgebra& k);
ComoduleAlgebra comodule_algebra_from_json(const Json& j, const HopfData& h);

/* files */
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
/** Two-space indent, trailing newline; the only rendering the tools use. */
std::string dump_canonical(const Json& j);

}  // namespace adjalg

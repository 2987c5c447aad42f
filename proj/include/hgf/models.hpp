#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgf/algebra.hpp"

namespace hgf {

/// Representation of a matrix Lie algebra g on a vector space, named by how
/// the realizing group acts: Ad_g, (Ad_{g^-1})^T, g, (g^-1)^T, or trivially.
enum class RepKind { Adjoint, Coadjoint, Standard, Dual, Trivial };
std::string_view to_string(RepKind k);

struct RepBlock {
  RepKind kind;
  int dim;  // only read for Trivial; derived otherwise
};

/// Unipotent matrix realization of the group integrating g.
struct Realization {
  int r = 0;                                       // matrix size
  std::vector<Matrix> g_basis;                     // r x r matrices for X_a
  std::vector<std::pair<int, int>> free_positions;  // strictly upper entries a group element may fill
  std::vector<RepBlock> h_rep;
  std::vector<RepBlock> l_rep;
};

/// Structure constants of the matrix algebra spanned by `basis`.
AlgebraPtr lie_from_matrices(std::string name, const std::vector<Matrix>& basis, std::vector<std::string> labels);
/// Linear coordinates on span(basis): coords = inv * (entries of m at pivots).
struct CoordinateMap {
  std::vector<std::pair<int, int>> pivots;
  Matrix inv;
};
CoordinateMap coordinate_map(const std::vector<Matrix>& basis);
/// Coordinates of a matrix in the span of `basis`; throws AlgebraError when outside.
Vec matrix_coordinates(const std::vector<Matrix>& basis, const Matrix& m);
int rep_block_dim(const RepBlock& b, int g_dim, int r);
/// Tensor X_a |> v_b = T[a,b,c] v_c of a direct sum of representation blocks.
Bilinear rep_tensor(const LieAlgebra& g, const std::vector<Matrix>& basis, const std::vector<RepBlock>& blocks);

struct Builtin {
  ModelPtr model;
  std::optional<Realization> realization;
};

std::vector<std::string> builtin_names();
/// Throws AlgebraError for an unknown name. Results are cached per name, so
/// repeated lookups share algebra pointers.
const Builtin& builtin(std::string_view name);

struct CorruptedModel {
  std::string name;
  ModelPtr model;
  std::string expected_axiom;
};
/// Deliberately broken variants of the builtins, each violating a named axiom.
std::vector<CorruptedModel> corrupted_models();

}  // namespace hgf

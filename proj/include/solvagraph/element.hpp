#pragma once

#include <string>
#include <vector>

namespace solvagraph {

enum class ElementKind { Permutation, MatrixModP, TableIndex };

// A group element carrier: a permutation given by its image array, an
// invertible matrix over a prime field, or a bare index into an abstract
// multiplication table. Equality, hashing and ordering all go through the
// canonical byte encoding (key()), which is injective across kinds.
class GroupElement {
 public:
  static GroupElement permutation(std::vector<int> images);
  static GroupElement identity_permutation(int degree);
  static GroupElement matrix_mod_p(int p, int dim, std::vector<int> entries);
  static GroupElement identity_matrix(int p, int dim);
  static GroupElement table_index(int idx);

  ElementKind kind() const { return kind_; }

  // Permutation accessors.
  int degree() const { return static_cast<int>(data_.size()); }
  const std::vector<int>& images() const { return data_; }

  // Matrix accessors.
  int modulus() const { return p_; }
  int dim() const { return dim_; }
  const std::vector<int>& entries() const { return data_; }

  int table_idx() const { return data_[0]; }

  const std::string& key() const { return key_; }
  bool is_identity() const;

  // this applied after rhs: (a*b) acts as b first, then a.
  GroupElement compose(const GroupElement& rhs) const;
  GroupElement inverse() const;

  // Cycle notation (1-based) for permutations, bracketed rows for matrices,
  // #k for table indices.
  std::string to_string() const;

  bool operator==(const GroupElement& o) const { return key_ == o.key_; }
  bool operator<(const GroupElement& o) const { return key_ < o.key_; }

 private:
  GroupElement(ElementKind kind, int p, int dim, std::vector<int> data);
  void build_key();

  ElementKind kind_;
  int p_ = 0;    // matrix modulus
  int dim_ = 0;  // matrix dimension
  std::vector<int> data_;
  std::string key_;
};

// Gauss-Jordan inverse of an n x n matrix over Z_p; throws SingularMatrix.
std::vector<int> invert_matrix_mod_p(const std::vector<int>& m, int p, int n);

}  // namespace solvagraph

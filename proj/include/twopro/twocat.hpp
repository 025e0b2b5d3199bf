#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twopro/error.hpp"
#include "twopro/fincat.hpp"

namespace twopro {

// A finite strict 2-category with all compositions tabulated.
// hcomp1(g, f) is g after f; hcomp2(b, a) is the horizontal composite with b
// on the later side, matching juxtaposition "b a".
class Fin2Cat {
 public:
  int add_object(std::string name);
  int add_one(std::string name, int src, int tgt);
  int add_two(std::string name, int src, int tgt);
  void set_id1(int obj, int one) { id1_[obj] = one; }
  void set_id2(int one, int two) { id2_[one] = two; }
  void set_vcomp(int b, int a, int r) { vcomp_[key(b, a)] = r; }
  void set_hcomp1(int g, int f, int r) { hcomp1_[key(g, f)] = r; }
  void set_hcomp2(int b, int a, int r) { hcomp2_[key(b, a)] = r; }
  void erase_vcomp(int b, int a) { vcomp_.erase(key(b, a)); }

  int num_objects() const { return static_cast<int>(obj_.size()); }
  int num_ones() const { return static_cast<int>(one_.size()); }
  int num_twos() const { return static_cast<int>(two_.size()); }
  const std::string& object_name(int x) const { return obj_[x]; }
  const std::string& one_name(int f) const { return one_[f]; }
  const std::string& two_name(int a) const { return two_[a]; }

  int src(int f) const { return one_src_[f]; }
  int tgt(int f) const { return one_tgt_[f]; }
  int src2(int a) const { return two_src_[a]; }
  int tgt2(int a) const { return two_tgt_[a]; }
  // Object boundaries of a 2-cell.
  int osrc(int a) const { return one_src_[two_src_[a]]; }
  int otgt(int a) const { return one_tgt_[two_src_[a]]; }

  int id1(int x) const { return id1_[x]; }
  int id2(int f) const { return id2_[f]; }
  int vcomp(int b, int a) const { return lookup(vcomp_, b, a); }
  int hcomp1(int g, int f) const { return lookup(hcomp1_, g, f); }
  int hcomp2(int b, int a) const { return lookup(hcomp2_, b, a); }

  const std::vector<int>& ones(int a, int b) const;
  const std::vector<int>& twos(int f, int g) const;

  std::optional<int> find_object(const std::string& n) const;
  std::optional<int> find_one(const std::string& n) const;
  std::optional<int> find_two(const std::string& n) const;

  // Vertical inverse, or -1.
  int inverse2(int a) const;
  bool is_invertible(int a) const { return inverse2(a) >= 0; }

  using Entries = std::vector<std::tuple<int, int, int>>;
  Entries vcomp_entries() const { return entries(vcomp_); }
  Entries hcomp1_entries() const { return entries(hcomp1_); }
  Entries hcomp2_entries() const { return entries(hcomp2_); }

  bool operator==(const Fin2Cat& o) const;

 private:
  using Table = std::unordered_map<std::uint64_t, int>;
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  static int lookup(const Table& t, int a, int b) {
    auto it = t.find(key(a, b));
    return it == t.end() ? -1 : it->second;
  }
  static Entries entries(const Table& t);

  std::vector<std::string> obj_, one_, two_;
  std::vector<int> one_src_, one_tgt_, two_src_, two_tgt_;
  std::vector<int> id1_, id2_;
  std::unordered_map<std::string, int> obj_idx_, one_idx_, two_idx_;
  std::unordered_map<std::uint64_t, std::vector<int>> ones_by_hom_, twos_by_hom_;
  Table vcomp_, hcomp1_, hcomp2_;
  mutable std::unordered_map<int, int> inverse_cache_;
};

struct CellRef {
  enum class Kind { Object, One, Two };
  Kind kind;
  int index;
};
CellRef resolve_cell(const Fin2Cat& c, CellRef::Kind kind, const std::string& id);

// Exhaustive check of every 2-category law; returns the first failure in
// scan order (objects, then 1-cells, then 2-cells, each sorted by id).
std::optional<Violation> check_two_category(const Fin2Cat& c);
// Throws Error carrying the first violation.
void validate_two_category(const Fin2Cat& c);

Fin2Cat dualize(const Fin2Cat& c);
FinCat hom_category(const Fin2Cat& c, int a, int b);

// hom_category together with the cell correspondence: object k is the 1-cell
// one[k], morphism m is the 2-cell two[m]; the reverse maps hold -1 off-hom.
struct HomIndex {
  FinCat cat;
  std::vector<int> one, two;
  std::vector<int> obj_of_one, mor_of_two;
};
HomIndex hom_index(const Fin2Cat& c, int a, int b);

// Cells are pairs with index x * |D| + y in each dimension.
Fin2Cat product_two_category(const Fin2Cat& c, const Fin2Cat& d);

enum class Side { Left, Right };
// Left: by∘cell (by is applied after); Right: cell∘by.
int whisker(const Fin2Cat& c, Side side, int cell, int by);

Fin2Cat terminal_two_category();

}  // namespace twopro

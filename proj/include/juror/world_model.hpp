#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace juror {

// A subset of a finite ground set {0, ..., size()-1}.
using PointSet = boost::dynamic_bitset<>;

PointSet make_point_set(std::size_t ground_size, std::initializer_list<std::size_t> points);
PointSet make_point_set(std::size_t ground_size, std::span<const std::size_t> points);
PointSet full_point_set(std::size_t ground_size);

// Ascending comma-separated indices, e.g. "0,3,7"; "" for the empty set.
std::string format_points(const PointSet& set);
PointSet parse_points(std::size_t ground_size, std::string_view text);

// Ordered collection of distinct testimony labels. The world space built on a
// catalog of size n has 2^(n+1) elements, so the size is capped (default 12).
class TestimonyCatalog {
 public:
  static constexpr std::size_t kDefaultCap = 12;
  // Transcripts are bitmasks; no cap override may go past this.
  static constexpr std::size_t kHardLimit = 24;

  TestimonyCatalog() = default;
  explicit TestimonyCatalog(std::vector<std::string> labels, std::size_t cap = kDefaultCap);

  // Labels "t1", ..., "tn".
  static TestimonyCatalog numbered(std::size_t n, std::size_t cap = kDefaultCap);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  std::size_t transcript_count() const noexcept { return std::size_t{1} << size(); }

  friend bool operator==(const TestimonyCatalog& a, const TestimonyCatalog& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::size_t cap_ = kDefaultCap;
};

// A set of testimonies, stored as a bitmask over catalog indices.
class Transcript {
 public:
  constexpr Transcript() = default;
  static constexpr Transcript from_mask(std::uint32_t mask) { return Transcript(mask); }

  // Throws ForeignTestimony for labels not in the catalog.
  static Transcript from_labels(const TestimonyCatalog& catalog, std::span<const std::string> labels);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(std::size_t index) const noexcept { return (mask_ >> index) & 1U; }
  constexpr bool is_subset_of(Transcript other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  std::size_t size() const noexcept;
  std::vector<std::string> labels(const TestimonyCatalog& catalog) const;

  friend constexpr auto operator<=>(Transcript, Transcript) = default;

 private:
  constexpr explicit Transcript(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

enum class Guilt { kGuilty, kInnocent };

struct World {
  Transcript transcript;
  Guilt guilt = Guilt::kGuilty;

  friend bool operator==(const World&, const World&) = default;
};

// W_S = transcripts x {G, I}. Worlds are indexed canonically: transcripts in
// binary-counting order, G before I, i.e. index = 2 * mask + (guilt == I).
class WorldSpace {
 public:
  // Throws CapExceeded when the catalog is larger than its cap.
  explicit WorldSpace(TestimonyCatalog catalog);

  const TestimonyCatalog& catalog() const noexcept { return catalog_; }
  std::size_t size() const noexcept { return std::size_t{2} << catalog_.size(); }
  std::size_t transcript_count() const noexcept { return catalog_.transcript_count(); }

  std::size_t index_of(const World& world) const;
  World world_at(std::size_t index) const;
  std::vector<World> worlds() const;
  std::vector<Transcript> transcripts() const;

  // E_T = {(T,G), (T,I)}. Throws ForeignTestimony if T is not over the catalog.
  PointSet event_of_transcript(Transcript transcript) const;
  // E_G: every world whose guilt value is G.
  PointSet guilt_event() const;
  // Worlds whose transcript includes every testimony of `required`.
  PointSet superset_event(Transcript required) const;

  // "{t1,t2}|G"
  std::string describe(std::size_t world_index) const;

 private:
  void check_transcript(Transcript transcript) const;

  TestimonyCatalog catalog_;
};

std::vector<World> full_world_space(const TestimonyCatalog& catalog);

// A finite Boolean algebra of subsets of {0, ..., ground_size-1}, represented
// by its atoms. Atoms are nonempty, pairwise disjoint, cover the ground set and
// are kept sorted by their smallest point.
class BooleanSubalgebra {
 public:
  BooleanSubalgebra() = default;

  // Validates that `blocks` partition the ground set into nonempty blocks.
  static BooleanSubalgebra from_partition(std::size_t ground_size, std::vector<PointSet> blocks);
  static BooleanSubalgebra trivial(std::size_t ground_size);
  // The full powerset: every point is an atom.
  static BooleanSubalgebra discrete(std::size_t ground_size);
  static BooleanSubalgebra generated(std::size_t ground_size, std::span<const PointSet> generators);

  std::size_t ground_size() const noexcept { return ground_size_; }
  const std::vector<PointSet>& atoms() const noexcept { return atoms_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }

  // Algebra generated by this one together with `set`.
  BooleanSubalgebra adjoin(const PointSet& set) const;

  bool is_expressible(const PointSet& set) const;
  // Indices of the atoms whose union is `set`, or nullopt if it is not a union of atoms.
  std::optional<std::vector<std::size_t>> decompose(const PointSet& set) const;
  // Atom containing `point`.
  std::size_t atom_of(std::size_t point) const;

  // Every member, 2^atom_count of them. Intended for small algebras.
  std::vector<PointSet> members() const;

  friend bool operator==(const BooleanSubalgebra& a, const BooleanSubalgebra& b) {
    return a.ground_size_ == b.ground_size_ && a.atoms_ == b.atoms_;
  }

 private:
  BooleanSubalgebra(std::size_t ground_size, std::vector<PointSet> atoms);

  std::size_t ground_size_ = 0;
  std::vector<PointSet> atoms_;
};

BooleanSubalgebra atoms_of_generated_algebra(std::size_t ground_size, std::span<const PointSet> generators);

// B is logically independent of the algebra iff B and its complement meet
// every member other than the empty set and the ground set. Checked at the
// atom level: vacuous with fewer than two atoms, otherwise B must meet every atom.
bool is_logically_independent(const PointSet& set, const BooleanSubalgebra& algebra);

inline bool is_expressible(const PointSet& set, const BooleanSubalgebra& algebra) {
  return algebra.is_expressible(set);
}

}  // namespace juror

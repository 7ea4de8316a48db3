#include "juror/world_model.hpp"

#include "juror/error.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

namespace juror {

PointSet make_point_set(std::size_t ground_size, std::initializer_list<std::size_t> points) {
  return make_point_set(ground_size, std::span<const std::size_t>(points.begin(), points.size()));
}

PointSet make_point_set(std::size_t ground_size, std::span<const std::size_t> points) {
  PointSet set(ground_size);
  for (std::size_t p : points) {
    if (p >= ground_size) {
      throw Error(ErrorKind::kInvalidArgument,
                  "point " + std::to_string(p) + " outside ground set of size " + std::to_string(ground_size));
    }
    set.set(p);
  }
  return set;
}

PointSet full_point_set(std::size_t ground_size) {
  PointSet set(ground_size);
  set.set();
  return set;
}

std::string format_points(const PointSet& set) {
  std::string out;
  for (auto p = set.find_first(); p != PointSet::npos; p = set.find_next(p)) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

PointSet parse_points(std::size_t ground_size, std::string_view text) {
  PointSet set(ground_size);
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::kParseError, "invalid point index '" + std::string(token) + "'");
    }
    if (value >= ground_size) {
      throw Error(ErrorKind::kParseError, "point index " + std::to_string(value) + " outside ground set");
    }
    set.set(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return set;
}

TestimonyCatalog::TestimonyCatalog(std::vector<std::string> labels, std::size_t cap)
    : labels_(std::move(labels)), cap_(cap) {
  if (cap_ > kHardLimit) {
    throw Error(ErrorKind::kCapExceeded, "world-space cap " + std::to_string(cap_) + " above hard limit " +
                                             std::to_string(kHardLimit));
  }
  if (labels_.size() > kHardLimit) {
    throw Error(ErrorKind::kCapExceeded, "catalog of " + std::to_string(labels_.size()) + " testimonies");
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate testimony label '" + label + "'");
    }
  }
}

TestimonyCatalog TestimonyCatalog::numbered(std::size_t n, std::size_t cap) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("t" + std::to_string(i));
  return TestimonyCatalog(std::move(labels), cap);
}

std::optional<std::size_t> TestimonyCatalog::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Transcript Transcript::from_labels(const TestimonyCatalog& catalog, std::span<const std::string> labels) {
  std::uint32_t mask = 0;
  for (const auto& label : labels) {
    auto index = catalog.index_of(label);
    if (!index) throw Error(ErrorKind::kForeignTestimony, "testimony '" + label + "' is not in the catalog");
    mask |= std::uint32_t{1} << *index;
  }
  return Transcript(mask);
}

std::size_t Transcript::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::string> Transcript::labels(const TestimonyCatalog& catalog) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (contains(i)) out.push_back(catalog.labels()[i]);
  }
  return out;
}

WorldSpace::WorldSpace(TestimonyCatalog catalog) : catalog_(std::move(catalog)) {
  if (catalog_.size() > catalog_.cap()) {
    throw Error(ErrorKind::kCapExceeded, "catalog has " + std::to_string(catalog_.size()) +
                                             " testimonies, cap is " + std::to_string(catalog_.cap()));
  }
}

void WorldSpace::check_transcript(Transcript transcript) const {
  if (transcript.mask() >= transcript_count()) {
    throw Error(ErrorKind::kForeignTestimony, "transcript references testimony outside the catalog");
  }
}

std::size_t WorldSpace::index_of(const World& world) const {
  check_transcript(world.transcript);
  return 2 * static_cast<std::size_t>(world.transcript.mask()) + (world.guilt == Guilt::kInnocent ? 1 : 0);
}

World WorldSpace::world_at(std::size_t index) const {
  if (index >= size()) throw Error(ErrorKind::kInvalidArgument, "world index out of range");
  return World{Transcript::from_mask(static_cast<std::uint32_t>(index / 2)),
               index % 2 == 0 ? Guilt::kGuilty : Guilt::kInnocent};
}

std::vector<World> WorldSpace::worlds() const {
  std::vector<World> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(world_at(i));
  return out;
}

std::vector<Transcript> WorldSpace::transcripts() const {
  std::vector<Transcript> out;
  out.reserve(transcript_count());
  for (std::size_t m = 0; m < transcript_count(); ++m) {
    out.push_back(Transcript::from_mask(static_cast<std::uint32_t>(m)));
  }
  return out;
}

PointSet WorldSpace::event_of_transcript(Transcript transcript) const {
  check_transcript(transcript);
  PointSet event(size());
  event.set(index_of({transcript, Guilt::kGuilty}));
  event.set(index_of({transcript, Guilt::kInnocent}));
  return event;
}

PointSet WorldSpace::guilt_event() const {
  PointSet event(size());
  for (std::size_t i = 0; i < size(); i += 2) event.set(i);
  return event;
}

PointSet WorldSpace::superset_event(Transcript required) const {
  check_transcript(required);
  PointSet event(size());
  for (std::size_t m = 0; m < transcript_count(); ++m) {
    if ((m & required.mask()) == required.mask()) {
      event.set(2 * m);
      event.set(2 * m + 1);
    }
  }
  return event;
}

std::string WorldSpace::describe(std::size_t world_index) const {
  World w = world_at(world_index);
  std::string out = "{";
  bool first = true;
  for (const auto& label : w.transcript.labels(catalog_)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  out += w.guilt == Guilt::kGuilty ? "}|G" : "}|I";
  return out;
}

std::vector<World> full_world_space(const TestimonyCatalog& catalog) { return WorldSpace(catalog).worlds(); }

namespace {

void sort_atoms(std::vector<PointSet>& atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const PointSet& a, const PointSet& b) { return a.find_first() < b.find_first(); });
}

}  // namespace

BooleanSubalgebra::BooleanSubalgebra(std::size_t ground_size, std::vector<PointSet> atoms)
    : ground_size_(ground_size), atoms_(std::move(atoms)) {
  sort_atoms(atoms_);
}

BooleanSubalgebra BooleanSubalgebra::from_partition(std::size_t ground_size, std::vector<PointSet> blocks) {
  PointSet covered(ground_size);
  for (const auto& block : blocks) {
    if (block.size() != ground_size) throw Error(ErrorKind::kInvalidArgument, "block over a different ground set");
    if (block.none()) throw Error(ErrorKind::kInvalidArgument, "empty block in partition");
    if (covered.intersects(block)) throw Error(ErrorKind::kInvalidArgument, "overlapping blocks in partition");
    covered |= block;
  }
  if (covered.count() != ground_size) {
    throw Error(ErrorKind::kInvalidArgument, "blocks do not cover the ground set");
  }
  return BooleanSubalgebra(ground_size, std::move(blocks));
}

BooleanSubalgebra BooleanSubalgebra::trivial(std::size_t ground_size) {
  std::vector<PointSet> atoms;
  if (ground_size > 0) atoms.push_back(full_point_set(ground_size));
  return BooleanSubalgebra(ground_size, std::move(atoms));
}

BooleanSubalgebra BooleanSubalgebra::discrete(std::size_t ground_size) {
  std::vector<PointSet> atoms;
  atoms.reserve(ground_size);
  for (std::size_t p = 0; p < ground_size; ++p) {
    PointSet atom(ground_size);
    atom.set(p);
    atoms.push_back(std::move(atom));
  }
  return BooleanSubalgebra(ground_size, std::move(atoms));
}

BooleanSubalgebra BooleanSubalgebra::generated(std::size_t ground_size, std::span<const PointSet> generators) {
  BooleanSubalgebra algebra = trivial(ground_size);
  for (const auto& g : generators) algebra = algebra.adjoin(g);
  return algebra;
}

BooleanSubalgebra BooleanSubalgebra::adjoin(const PointSet& set) const {
  if (set.size() != ground_size_) throw Error(ErrorKind::kInvalidArgument, "set over a different ground set");
  std::vector<PointSet> refined;
  refined.reserve(atoms_.size() * 2);
  for (const auto& atom : atoms_) {
    PointSet inside = atom & set;
    PointSet outside = atom - set;
    if (inside.any()) refined.push_back(std::move(inside));
    if (outside.any()) refined.push_back(std::move(outside));
  }
  return BooleanSubalgebra(ground_size_, std::move(refined));
}

std::optional<std::vector<std::size_t>> BooleanSubalgebra::decompose(const PointSet& set) const {
  if (set.size() != ground_size_) return std::nullopt;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& atom = atoms_[i];
    if (!atom.intersects(set)) continue;
    if (!atom.is_subset_of(set)) return std::nullopt;
    indices.push_back(i);
  }
  return indices;
}

bool BooleanSubalgebra::is_expressible(const PointSet& set) const { return decompose(set).has_value(); }

std::size_t BooleanSubalgebra::atom_of(std::size_t point) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].test(point)) return i;
  }
  throw Error(ErrorKind::kInvalidArgument, "point outside ground set");
}

std::vector<PointSet> BooleanSubalgebra::members() const {
  if (atoms_.size() > 20) throw Error(ErrorKind::kCapExceeded, "too many atoms to enumerate members");
  std::vector<PointSet> out;
  out.reserve(std::size_t{1} << atoms_.size());
  for (std::size_t pick = 0; pick < (std::size_t{1} << atoms_.size()); ++pick) {
    PointSet member(ground_size_);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if ((pick >> i) & 1U) member |= atoms_[i];
    }
    out.push_back(std::move(member));
  }
  return out;
}

BooleanSubalgebra atoms_of_generated_algebra(std::size_t ground_size, std::span<const PointSet> generators) {
  return BooleanSubalgebra::generated(ground_size, generators);
}

bool is_logically_independent(const PointSet& set, const BooleanSubalgebra& algebra) {
  if (algebra.atom_count() < 2) return true;
  return std::all_of(algebra.atoms().begin(), algebra.atoms().end(),
                     [&](const PointSet& atom) { return atom.intersects(set); });
}

}  // namespace juror

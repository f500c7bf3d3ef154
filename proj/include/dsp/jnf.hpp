#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "dsp/exact.hpp"

namespace dsp {

/// Weakly decreasing list of positive block sizes. Normalized on construction
/// (sorted descending, zeros dropped); an empty result is rejected.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int size() const;
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  [[nodiscard]] bool all_ones() const { return largest() == 1; }
  /// sum of min(b_i, k)
  [[nodiscard]] int truncated_sum(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

Partition conjugate_partition(const Partition& p);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// Partition made of `copies` repetitions of every part of p.
Partition repeat_parts(const Partition& p, int copies);
/// lower <= upper in the dominance order, equivalently the nilpotent orbit of
/// `lower` lies in the closure of that of `upper`.
bool dominated_by(const Partition& lower, const Partition& upper);

/// One partition per distinct eigenvalue label; label order is the canonical order.
class JnfShape {
public:
  JnfShape() = default;
  explicit JnfShape(std::vector<Partition> blocks);
  JnfShape(std::initializer_list<Partition> blocks) : JnfShape(std::vector<Partition>(blocks)) {}

  [[nodiscard]] const std::vector<Partition>& blocks() const { return blocks_; }
  [[nodiscard]] const Partition& at(std::size_t label) const { return blocks_.at(label); }
  [[nodiscard]] std::size_t labels() const { return blocks_.size(); }
  [[nodiscard]] int size() const;
  [[nodiscard]] bool is_semisimple() const;
  /// Labels sorted by partition; identifies shapes up to relabelling.
  [[nodiscard]] JnfShape canonical() const;

  friend bool operator==(const JnfShape&, const JnfShape&) = default;
  friend auto operator<=>(const JnfShape&, const JnfShape&) = default;

private:
  std::vector<Partition> blocks_;
};

std::string to_string(const JnfShape& j);

struct RankSequence {
  /// ranks[k-1] = rank (Y - lambda I)^k for k = 1..largest block
  std::vector<int> ranks;
  int stable = 0; // n - multiplicity
  /// rank at exponent k >= 1, extended by the stable value
  [[nodiscard]] int at(int k) const;
};

RankSequence rank_sequence(const JnfShape& j, std::size_t label);
int r_of(const JnfShape& j);
int d_of(const JnfShape& j);

enum class Mode { additive, multiplicative };
std::string to_string(Mode m);

using Eigenvalue = std::variant<GaussianRational, PolarValue>;
std::string to_string(const Eigenvalue& e);
Mode mode_of(const Eigenvalue& e);

struct EigenSlot {
  Eigenvalue value;
  Partition blocks;
  [[nodiscard]] int multiplicity() const { return blocks.size(); }
  friend bool operator==(const EigenSlot&, const EigenSlot&) = default;
};

/// Conjugacy class: a JNF together with its (distinct) eigenvalues.
struct ClassSpec {
  std::vector<EigenSlot> slots;

  [[nodiscard]] int size() const;
  [[nodiscard]] JnfShape shape() const;
  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

struct SubordinationResult {
  bool subordinate = false;
  bool strict = false; // some rank inequality is strict, i.e. lower != upper
  std::string reason;
  struct LabelCertificate {
    std::size_t lower_label = 0;
    std::size_t upper_label = 0;
    std::vector<bool> strict_at; // index k-1
  };
  std::vector<LabelCertificate> labels;
};

/// Whether `lower` lies in the closure of `upper`.
SubordinationResult is_subordinate(const ClassSpec& lower, const ClassSpec& upper);

} // namespace dsp

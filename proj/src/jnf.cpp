#include "dsp/jnf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dsp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int b : parts_)
    if (b < 0) throw InputError("partition part must be nonnegative");
  std::erase(parts_, 0);
  if (parts_.empty()) throw InputError("partition must have a positive part");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::truncated_sum(int k) const {
  int s = 0;
  for (int b : parts_) s += std::min(b, k);
  return s;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p.parts()[i];
  os << '}';
  return os.str();
}

Partition conjugate_partition(const Partition& p) {
  std::vector<int> conj(static_cast<std::size_t>(p.largest()), 0);
  for (int b : p.parts())
    for (int k = 0; k < b; ++k) ++conj[static_cast<std::size_t>(k)];
  return Partition(std::move(conj));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int b = std::min(rest, max_part); b >= 1; --b) {
      cur.push_back(b);
      rec(rest - b, b);
      cur.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

Partition repeat_parts(const Partition& p, int copies) {
  std::vector<int> parts;
  for (int b : p.parts())
    for (int c = 0; c < copies; ++c) parts.push_back(b);
  return Partition(std::move(parts));
}

bool dominated_by(const Partition& lower, const Partition& upper) {
  if (lower.size() != upper.size()) return false;
  for (int k = 1; k <= std::max(lower.largest(), upper.largest()); ++k)
    if (upper.truncated_sum(k) > lower.truncated_sum(k)) return false;
  return true;
}

JnfShape::JnfShape(std::vector<Partition> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InputError("Jordan normal form needs at least one eigenvalue");
  for (const auto& p : blocks_)
    if (p.parts().empty()) throw InputError("Jordan normal form contains an empty partition");
}

int JnfShape::size() const {
  int n = 0;
  for (const auto& p : blocks_) n += p.size();
  return n;
}

bool JnfShape::is_semisimple() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Partition& p) { return p.all_ones(); });
}

JnfShape JnfShape::canonical() const {
  auto b = blocks_;
  std::sort(b.begin(), b.end());
  return JnfShape(std::move(b));
}

std::string to_string(const JnfShape& j) {
  std::string s = "{";
  for (const auto& p : j.blocks()) s += to_string(p);
  return s + "}";
}

int RankSequence::at(int k) const {
  if (k <= 0) throw std::invalid_argument("rank exponent must be positive");
  if (static_cast<std::size_t>(k) <= ranks.size()) return ranks[static_cast<std::size_t>(k - 1)];
  return stable;
}

RankSequence rank_sequence(const JnfShape& j, std::size_t label) {
  if (label >= j.labels()) throw std::out_of_range("unknown eigenvalue label " + std::to_string(label));
  const Partition& p = j.at(label);
  const int n = j.size();
  RankSequence rs;
  for (int k = 1; k <= p.largest(); ++k) rs.ranks.push_back(n - p.truncated_sum(k));
  rs.stable = n - p.size();
  return rs;
}

int r_of(const JnfShape& j) {
  std::size_t most = 0;
  for (const auto& p : j.blocks()) most = std::max(most, p.length());
  return j.size() - static_cast<int>(most);
}

int d_of(const JnfShape& j) {
  const int n = j.size();
  int centralizer = 0;
  for (const auto& p : j.blocks()) {
    const Partition conj = conjugate_partition(p);
    for (int c : conj.parts()) centralizer += c * c;
  }
  return n * n - centralizer;
}

std::string to_string(Mode m) { return m == Mode::additive ? "additive" : "multiplicative"; }

std::string to_string(const Eigenvalue& e) {
  return std::visit([](const auto& v) { return to_string(v); }, e);
}

Mode mode_of(const Eigenvalue& e) {
  return std::holds_alternative<GaussianRational>(e) ? Mode::additive : Mode::multiplicative;
}

int ClassSpec::size() const {
  int n = 0;
  for (const auto& s : slots) n += s.multiplicity();
  return n;
}

JnfShape ClassSpec::shape() const {
  std::vector<Partition> b;
  for (const auto& s : slots) b.push_back(s.blocks);
  return JnfShape(std::move(b));
}

SubordinationResult is_subordinate(const ClassSpec& lower, const ClassSpec& upper) {
  SubordinationResult res;
  if (lower.size() != upper.size()) {
    res.reason = "class sizes differ";
    return res;
  }
  if (lower.slots.size() != upper.slots.size()) {
    res.reason = "numbers of distinct eigenvalues differ";
    return res;
  }
  const JnfShape lower_shape = lower.shape();
  const JnfShape upper_shape = upper.shape();
  for (std::size_t li = 0; li < lower.slots.size(); ++li) {
    const auto it = std::find_if(upper.slots.begin(), upper.slots.end(),
                                 [&](const EigenSlot& s) { return s.value == lower.slots[li].value; });
    if (it == upper.slots.end()) {
      res.labels.clear();
      res.reason = "eigenvalue " + to_string(lower.slots[li].value) + " missing from upper class";
      return res;
    }
    const auto ui = static_cast<std::size_t>(it - upper.slots.begin());
    if (it->multiplicity() != lower.slots[li].multiplicity()) {
      res.labels.clear();
      res.reason = "multiplicity of eigenvalue " + to_string(it->value) + " differs";
      return res;
    }
    const RankSequence lo = rank_sequence(lower_shape, li);
    const RankSequence up = rank_sequence(upper_shape, ui);
    SubordinationResult::LabelCertificate cert{li, ui, {}};
    const int kmax = std::max(lower.slots[li].blocks.largest(), it->blocks.largest());
    for (int k = 1; k <= kmax; ++k) {
      if (up.at(k) < lo.at(k)) {
        res.labels.clear();
        res.reason = "rank of power " + std::to_string(k) + " at eigenvalue " + to_string(it->value) +
                     " is larger in the lower class";
        return res;
      }
      cert.strict_at.push_back(up.at(k) > lo.at(k));
      res.strict = res.strict || cert.strict_at.back();
    }
    res.labels.push_back(std::move(cert));
  }
  res.subordinate = true;
  return res;
}

} // namespace dsp

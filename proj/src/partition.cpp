#include "jackprod/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace jackprod {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "()") return Partition();
  if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("invalid partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid partition '") + std::string(text) + "': " + e.what());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n) {
    throw DomainError("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
  }
  std::vector<int> out(parts_);
  out.resize(static_cast<std::size_t>(n), 0);
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

JackParameter::JackParameter(Rational k) : k_(std::move(k)) {
  k_.canonicalize();
  if (k_ <= 0) throw DomainError("Jack parameter k must be positive, got " + k_.get_str());
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) return false;
  const std::size_t len = static_cast<std::size_t>(std::max(mu.length(), lambda.length()));
  int smu = 0;
  int slam = 0;
  for (std::size_t i = 0; i < len; ++i) {
    smu += mu[i];
    slam += lambda[i];
    if (smu > slam) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return Partition();
  std::vector<int> conj(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

namespace {

void enumerate(int remaining, int max_part, int parts_left, std::vector<int>& current,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    // the rest must fit into parts_left - 1 parts of size <= p
    if (static_cast<long>(p) * parts_left < remaining) break;
    current.push_back(p);
    enumerate(remaining - p, p, parts_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of_weight(int d, int max_parts) {
  if (d < 0) throw DomainError("partitions_of_weight: negative weight");
  if (max_parts < 1) throw DomainError("partitions_of_weight: max_parts must be >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate(d, d, max_parts, current, out);
  return out;
}

}  // namespace jackprod

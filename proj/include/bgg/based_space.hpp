#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bgg/rational.hpp"

namespace bgg {

// A finite dimensional vector space with an ordered basis of distinct string
// labels and a rational geometric weight per basis vector (the eigenvalue of
// the grading element on that vector).
class BasedSpace {
 public:
  BasedSpace() = default;
  BasedSpace(std::vector<std::string> labels, std::vector<Rat> weights)
      : labels_(std::move(labels)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(labels_.size(), Rat(0));
    if (weights_.size() != labels_.size())
      throw std::invalid_argument("BasedSpace: label/weight size mismatch");
    for (int i = 0; i < (int)labels_.size(); ++i) {
      auto [it, fresh] = index_.emplace(labels_[i], i);
      if (!fresh) throw std::invalid_argument("BasedSpace: duplicate label " + labels_[i]);
    }
  }
  explicit BasedSpace(std::vector<std::string> labels)
      : BasedSpace(std::move(labels), {}) {}

  static BasedSpace anonymous(int dim, const std::string& prefix = "b") {
    std::vector<std::string> lab;
    lab.reserve(dim);
    for (int i = 0; i < dim; ++i) lab.push_back(prefix + std::to_string(i));
    return BasedSpace(std::move(lab));
  }

  int dim() const { return (int)labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const Rat& weight(int i) const { return weights_.at(i); }
  const std::vector<Rat>& weights() const { return weights_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("BasedSpace: unknown label " + label);
    return it->second;
  }
  bool has_label(const std::string& label) const { return index_.count(label) != 0; }

  // Spaces are compatible for composition when the label lists agree.
  bool same_labels(const BasedSpace& other) const { return labels_ == other.labels_; }

  BasedSpace dual(const std::string& suffix = "*") const {
    std::vector<std::string> lab;
    std::vector<Rat> w;
    lab.reserve(dim());
    for (int i = 0; i < dim(); ++i) {
      lab.push_back(labels_[i] + suffix);
      w.push_back(-weights_[i]);
    }
    return BasedSpace(std::move(lab), std::move(w));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rat> weights_;
  std::map<std::string, int> index_;
};

}  // namespace bgg

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cdtree {

using Label = std::int64_t;

struct TreeNode {
  // Internal nodes route x <= threshold to `left`, x > threshold to `right`.
  double threshold = 0.0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  // Majority training label of the node's subset (ties to the smallest).
  Label prediction = 0;
  std::uint32_t n_samples = 0;

  bool is_leaf() const { return left < 0; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// Binary classification tree over one numeric input, grown without a depth
// limit. Node 0 is the root.
class Tree {
 public:
  std::span<const TreeNode> nodes() const { return nodes_; }
  const TreeNode& root() const { return nodes_.front(); }

  Label Predict(double x) const;
  std::vector<Label> Predict(std::span<const double> xs) const;

  // Number of internal nodes visited on the way from the root to x's leaf.
  std::size_t PathLength(double x) const;

  // Longest root-to-leaf path in edges; 0 for a single leaf.
  std::size_t Depth() const;
  std::size_t NodeCount() const { return nodes_.size(); }
  std::size_t LeafCount() const;
  std::size_t InternalCount() const { return NodeCount() - LeafCount(); }

  // Average PathLength over xs. Throws kEmptyInput.
  double MeanPathLength(std::span<const double> xs) const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  friend Tree FitTree(std::span<const double>, std::span<const Label>);
  std::vector<TreeNode> nodes_;
};

// Greedy CART with Gini impurity. Candidate thresholds are midpoints between
// consecutive distinct x values of a node's subset; the split with the largest
// impurity decrease wins, ties going to the smallest threshold. A node becomes
// a leaf when it is pure in y, constant in x, or no split strictly decreases
// impurity. Throws kLengthMismatch or kEmptyInput.
Tree FitTree(std::span<const double> x, std::span<const Label> y);

}  // namespace cdtree

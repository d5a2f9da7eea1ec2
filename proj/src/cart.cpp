#include "cdtree/cart.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cdtree/core.hpp"

namespace cdtree {

namespace {

__extension__ typedef __int128 Wide;

// Split quality as the exact fraction (sl*nr + sr*nl) / (nl*nr), where sl, sr
// are the sums of squared class counts on each side. Maximizing it is the same
// as maximizing the weighted Gini decrease.
struct SplitScore {
  Wide num = 0;
  Wide den = 1;

  bool operator>(const SplitScore& other) const {
    return num * other.den > other.num * den;
  }
};

struct Frame {
  std::size_t begin;
  std::size_t end;
  std::int32_t node;
};

}  // namespace

Tree FitTree(std::span<const double> x, std::span<const Label> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "tree input has " + std::to_string(x.size()) +
                    " values but target has " + std::to_string(y.size()));
  }
  if (x.empty()) throw Error(ErrorCode::kEmptyInput, "cannot fit a tree to no data");
  for (double v : x) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "tree input is not finite");
  }
  const std::size_t n = x.size();

  // Dense class ids in label order, so the smallest id is the smallest label.
  std::vector<Label> classes(y.begin(), y.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  // Every node's subset is a contiguous run of the x-sorted samples.
  std::vector<double> xs(n);
  std::vector<std::uint32_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = x[order[i]];
    cls[i] = static_cast<std::uint32_t>(
        std::lower_bound(classes.begin(), classes.end(), y[order[i]]) -
        classes.begin());
  }

  std::vector<std::int64_t> counts(classes.size(), 0);
  std::vector<std::int64_t> left_counts(classes.size(), 0);
  std::vector<std::uint32_t> touched;

  Tree tree;
  tree.nodes_.push_back(TreeNode{});
  std::vector<Frame> stack{{0, n, 0}};

  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    const std::size_t size = frame.end - frame.begin;

    touched.clear();
    for (std::size_t i = frame.begin; i < frame.end; ++i) {
      if (counts[cls[i]]++ == 0) touched.push_back(cls[i]);
    }
    std::uint32_t majority = touched.front();
    std::int64_t parent_sumsq = 0;
    for (std::uint32_t c : touched) {
      if (counts[c] > counts[majority] ||
          (counts[c] == counts[majority] && c < majority)) {
        majority = c;
      }
      parent_sumsq += counts[c] * counts[c];
    }

    TreeNode& node = tree.nodes_[frame.node];
    node.prediction = classes[majority];
    node.n_samples = static_cast<std::uint32_t>(size);

    std::size_t best_cut = 0;  // samples [begin, best_cut) go left
    SplitScore best;
    bool have_split = false;
    if (touched.size() > 1 && xs[frame.begin] != xs[frame.end - 1]) {
      std::int64_t sumsq_left = 0;
      std::int64_t sumsq_right = parent_sumsq;
      for (std::size_t i = frame.begin; i + 1 < frame.end; ++i) {
        const std::uint32_t c = cls[i];
        sumsq_left += 2 * left_counts[c] + 1;
        ++left_counts[c];
        sumsq_right -= 2 * counts[c] - 1;
        --counts[c];
        if (xs[i] == xs[i + 1]) continue;
        const std::int64_t n_left = static_cast<std::int64_t>(i + 1 - frame.begin);
        const std::int64_t n_right = static_cast<std::int64_t>(size) - n_left;
        SplitScore score{Wide{sumsq_left} * n_right + Wide{sumsq_right} * n_left,
                         Wide{n_left} * n_right};
        if (!have_split || score > best) {
          best = score;
          best_cut = i + 1;
          have_split = true;
        }
      }
      // Strictly positive Gini decrease: best.num / best.den > sumsq / size.
      if (have_split &&
          !(best.num * static_cast<Wide>(size) > Wide{parent_sumsq} * best.den)) {
        have_split = false;
      }
    }
    for (std::uint32_t c : touched) {
      counts[c] = 0;
      left_counts[c] = 0;
    }
    if (!have_split) continue;

    const double below = xs[best_cut - 1];
    const double above = xs[best_cut];
    double threshold = std::midpoint(below, above);
    if (!(threshold < above)) threshold = below;

    const auto left_id = static_cast<std::int32_t>(tree.nodes_.size());
    tree.nodes_.push_back(TreeNode{});
    tree.nodes_.push_back(TreeNode{});
    TreeNode& parent = tree.nodes_[frame.node];
    parent.threshold = threshold;
    parent.left = left_id;
    parent.right = left_id + 1;
    // Right first so the left subtree is expanded first.
    stack.push_back({best_cut, frame.end, left_id + 1});
    stack.push_back({frame.begin, best_cut, left_id});
  }
  return tree;
}

Label Tree::Predict(double x) const {
  const TreeNode* node = &nodes_.front();
  while (!node->is_leaf()) {
    node = &nodes_[x <= node->threshold ? node->left : node->right];
  }
  return node->prediction;
}

std::vector<Label> Tree::Predict(std::span<const double> xs) const {
  std::vector<Label> out;
  out.reserve(xs.size());
  for (double v : xs) out.push_back(Predict(v));
  return out;
}

std::size_t Tree::PathLength(double x) const {
  std::size_t steps = 0;
  const TreeNode* node = &nodes_.front();
  while (!node->is_leaf()) {
    node = &nodes_[x <= node->threshold ? node->left : node->right];
    ++steps;
  }
  return steps;
}

std::size_t Tree::Depth() const {
  // Children always have larger ids than their parent.
  std::vector<std::size_t> depth(nodes_.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const TreeNode& node = nodes_[i];
    if (node.is_leaf()) {
      deepest = std::max(deepest, depth[i]);
    } else {
      depth[node.left] = depth[i] + 1;
      depth[node.right] = depth[i] + 1;
    }
  }
  return deepest;
}

std::size_t Tree::LeafCount() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(),
                    [](const TreeNode& node) { return node.is_leaf(); }));
}

double Tree::MeanPathLength(std::span<const double> xs) const {
  if (xs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "mean path length needs at least one input");
  }
  std::size_t total = 0;
  for (double v : xs) total += PathLength(v);
  return static_cast<double>(total) / static_cast<double>(xs.size());
}

}  // namespace cdtree

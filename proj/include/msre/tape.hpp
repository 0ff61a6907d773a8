#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "msre/mat.hpp"

namespace msre {

// A named trainable tensor. Gradients accumulate into `grad` when a Tape that
// references the parameter runs backward().
struct Param {
  std::string name;
  Mat value;
  Mat grad;

  Param() = default;
  Param(std::string n, Mat v) : name(std::move(n)), value(std::move(v)) {
    grad = Mat::zeros(value.rows, value.cols);
  }
  void zero_grad() { grad.fill(0.0); }
};

// Reverse-mode autodiff over Mat values. Nodes are identified by index so the
// underlying vector may reallocate. One tape per forward/backward pass.
class Tape {
 public:
  using NodeId = int;

  Tape() = default;

  // --- graph construction -------------------------------------------------
  NodeId leaf(Mat v);            // constant, no gradient
  NodeId param(Param& p);        // leaf bound to external parameter storage

  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  NodeId emul(NodeId a, NodeId b);
  NodeId emax(NodeId a, NodeId b);  // elementwise max, ties favor first input
  NodeId scale(NodeId a, double s);
  NodeId add_scalar(NodeId a, double s);
  NodeId add_rowvec(NodeId a, NodeId bias);  // bias [1 x c] broadcast over rows
  NodeId matmul(NodeId a, NodeId b);
  NodeId tanh_(NodeId a);
  NodeId sigmoid_(NodeId a);
  NodeId relu_(NodeId a);
  NodeId rows(NodeId table, std::vector<int> ids);        // gather rows
  NodeId shift_rows(NodeId a, int offset);                // out[i] = a[i+offset], zero outside
  NodeId slice_rows(NodeId a, int r0, int r1);
  NodeId slice_cols(NodeId a, int c0, int c1);
  NodeId concat_rows(const std::vector<NodeId>& parts);
  NodeId concat_cols(const std::vector<NodeId>& parts);
  NodeId conv_cols(NodeId a, NodeId w);   // 1-D valid convolution along the feature axis
  NodeId colwise_max(NodeId a);           // [1 x c], ties favor the lowest row
  NodeId colwise_mean(NodeId a);          // [1 x c]
  NodeId rowwise_softmax(NodeId a);
  NodeId sum_all(NodeId a);               // [1 x 1]
  NodeId softmax_ce(NodeId logits, int label);  // [1 x 1], stable log-sum-exp

  // --- evaluation ---------------------------------------------------------
  const Mat& val(NodeId id) const { return nodes_[id].val; }
  double scalar(NodeId id) const { return nodes_[id].val(0, 0); }
  const Mat& grad(NodeId id) const { return nodes_[id].grad; }
  const char* op_name(NodeId id) const { return nodes_[id].op; }
  int size() const { return static_cast<int>(nodes_.size()); }

  // Runs reverse accumulation from a scalar node and adds parameter
  // gradients into their bound Param::grad.
  void backward(NodeId loss);

  // Name of the first node whose value contains a non-finite entry, or empty.
  std::string first_non_finite() const;

  // Hash of relu/max/hinge activation patterns, collected when enabled.
  // Used by the gradient checker to detect kink crossings.
  void collect_kinks(bool on) { collect_kinks_ = on; }
  uint64_t kink_signature() const { return kink_sig_; }

 private:
  struct Node {
    Mat val;
    Mat grad;
    const char* op = "leaf";
    bool requires_grad = false;
    std::function<void(Tape&, Node&)> back;  // may be empty for leaves
  };

  NodeId push(Mat v, const char* op, bool req, std::function<void(Tape&, Node&)> back);
  Node& at(NodeId id) { return nodes_[id]; }
  void ensure_grad(NodeId id);
  void kink_event(uint64_t x);

  std::vector<Node> nodes_;
  std::vector<std::pair<NodeId, Param*>> bindings_;
  bool collect_kinks_ = false;
  uint64_t kink_sig_ = 1469598103934665603ULL;

  friend struct TapeOps;
};

}  // namespace msre

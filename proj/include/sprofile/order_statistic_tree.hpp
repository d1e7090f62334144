#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sprofile/events.hpp"

namespace sprofile {

// Size-augmented AVL tree over (frequency, object id) pairs, one entry per
// object of a fixed universe. Pairs are unique because the id breaks ties, so
// k-th order statistics are well-defined. An event erases the object's old
// pair and inserts the new one, two O(log m) walks. Nodes live in a pool
// indexed by int32; -1 is the null link.
class OrderStatisticTree {
 public:
  explicit OrderStatisticTree(std::uint32_t m) : freq_(m, 0) {
    if (m == 0) {
      throw std::invalid_argument("OrderStatisticTree: universe size must be positive");
    }
    nodes_.reserve(m);
    // All objects start at frequency 0; ascending (0, id) order is id order,
    // so the initial tree can be built perfectly balanced.
    root_ = build_range(1, static_cast<std::int64_t>(m));
  }

  std::uint32_t universe() const { return static_cast<std::uint32_t>(freq_.size()); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(freq_.size()); }

  void apply(const LogEvent& e) {
    const std::uint32_t x = check_id(e.id);
    const frequency_t old_f = freq_[x];
    const frequency_t new_f = e.action == Action::Add ? old_f + 1 : old_f - 1;
    root_ = erase_at(root_, old_f, e.id);
    root_ = insert_at(root_, new_f, e.id);
    freq_[x] = new_f;
  }

  frequency_t frequency(object_id x) const { return freq_[check_id(x)]; }

  // k-th smallest pair in (frequency, id) order, 1-based.
  std::pair<frequency_t, object_id> kth(std::uint32_t k) const {
    if (k < 1 || k > freq_.size()) {
      throw std::invalid_argument("OrderStatisticTree: k " + std::to_string(k) +
                                  " outside [1, " + std::to_string(freq_.size()) + "]");
    }
    std::int32_t t = root_;
    std::uint32_t want = k;
    while (true) {
      const Node& n = nodes_[static_cast<std::uint32_t>(t)];
      const std::uint32_t left_size = subtree_size(n.left);
      if (want == left_size + 1) return {n.freq, n.obj};
      if (want <= left_size) {
        t = n.left;
      } else {
        want -= left_size + 1;
        t = n.right;
      }
    }
  }

  // Sorted in-order, sizes and heights consistent, AVL balance everywhere.
  void audit() const {
    bool have_prev = false;
    frequency_t pf = 0;
    object_id po = 0;
    const std::uint32_t total = audit_at(root_, have_prev, pf, po);
    if (total != freq_.size()) {
      throw std::logic_error("OrderStatisticTree audit: entry count " +
                             std::to_string(total) + " != " +
                             std::to_string(freq_.size()));
    }
  }

 private:
  struct Node {
    frequency_t freq;
    object_id obj;  // stored 1-based
    std::int32_t left;
    std::int32_t right;
    std::int32_t height;
    std::uint32_t size;
  };

  std::uint32_t check_id(object_id x) const {
    if (x < 1 || x > freq_.size()) {
      throw std::invalid_argument("OrderStatisticTree: object id " + std::to_string(x) +
                                  " outside [1, " + std::to_string(freq_.size()) + "]");
    }
    return x - 1;
  }

  static bool key_less(frequency_t fa, object_id oa, frequency_t fb, object_id ob) {
    return fa < fb || (fa == fb && oa < ob);
  }

  std::int32_t subtree_height(std::int32_t t) const {
    return t < 0 ? 0 : nodes_[static_cast<std::uint32_t>(t)].height;
  }
  std::uint32_t subtree_size(std::int32_t t) const {
    return t < 0 ? 0 : nodes_[static_cast<std::uint32_t>(t)].size;
  }

  std::int32_t new_node(frequency_t f, object_id obj) {
    std::int32_t t;
    if (free_head_ >= 0) {
      t = free_head_;
      free_head_ = nodes_[static_cast<std::uint32_t>(t)].left;
      nodes_[static_cast<std::uint32_t>(t)] = Node{f, obj, -1, -1, 1, 1};
    } else {
      t = static_cast<std::int32_t>(nodes_.size());
      nodes_.push_back(Node{f, obj, -1, -1, 1, 1});
    }
    return t;
  }

  void free_node(std::int32_t t) {
    nodes_[static_cast<std::uint32_t>(t)].left = free_head_;
    free_head_ = t;
  }

  std::int32_t build_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) return -1;
    const std::int64_t mid = lo + (hi - lo) / 2;
    const std::int32_t t = new_node(0, static_cast<object_id>(mid));
    // Re-index after each recursive call: new_node may grow the pool.
    const std::int32_t left = build_range(lo, mid - 1);
    nodes_[static_cast<std::uint32_t>(t)].left = left;
    const std::int32_t right = build_range(mid + 1, hi);
    nodes_[static_cast<std::uint32_t>(t)].right = right;
    pull(t);
    return t;
  }

  void pull(std::int32_t t) {
    Node& n = nodes_[static_cast<std::uint32_t>(t)];
    n.height = 1 + std::max(subtree_height(n.left), subtree_height(n.right));
    n.size = 1 + subtree_size(n.left) + subtree_size(n.right);
  }

  std::int32_t rotate_right(std::int32_t t) {
    Node& n = nodes_[static_cast<std::uint32_t>(t)];
    const std::int32_t child = n.left;
    n.left = nodes_[static_cast<std::uint32_t>(child)].right;
    nodes_[static_cast<std::uint32_t>(child)].right = t;
    pull(t);
    pull(child);
    return child;
  }

  std::int32_t rotate_left(std::int32_t t) {
    Node& n = nodes_[static_cast<std::uint32_t>(t)];
    const std::int32_t child = n.right;
    n.right = nodes_[static_cast<std::uint32_t>(child)].left;
    nodes_[static_cast<std::uint32_t>(child)].left = t;
    pull(t);
    pull(child);
    return child;
  }

  std::int32_t rebalance(std::int32_t t) {
    pull(t);
    Node& n = nodes_[static_cast<std::uint32_t>(t)];
    const std::int32_t bf = subtree_height(n.left) - subtree_height(n.right);
    if (bf > 1) {
      const std::int32_t lc = n.left;
      if (subtree_height(nodes_[static_cast<std::uint32_t>(lc)].left) <
          subtree_height(nodes_[static_cast<std::uint32_t>(lc)].right)) {
        n.left = rotate_left(lc);
      }
      return rotate_right(t);
    }
    if (bf < -1) {
      const std::int32_t rc = n.right;
      if (subtree_height(nodes_[static_cast<std::uint32_t>(rc)].right) <
          subtree_height(nodes_[static_cast<std::uint32_t>(rc)].left)) {
        n.right = rotate_right(rc);
      }
      return rotate_left(t);
    }
    return t;
  }

  std::int32_t insert_at(std::int32_t t, frequency_t f, object_id obj) {
    if (t < 0) return new_node(f, obj);
    const std::uint32_t ut = static_cast<std::uint32_t>(t);
    if (key_less(f, obj, nodes_[ut].freq, nodes_[ut].obj)) {
      const std::int32_t left = insert_at(nodes_[ut].left, f, obj);
      nodes_[ut].left = left;  // re-index: new_node may grow the pool
    } else {
      const std::int32_t right = insert_at(nodes_[ut].right, f, obj);
      nodes_[ut].right = right;
    }
    return rebalance(t);
  }

  std::int32_t erase_at(std::int32_t t, frequency_t f, object_id obj) {
    if (t < 0) {
      throw std::logic_error("OrderStatisticTree: erase of missing pair");
    }
    const std::uint32_t ut = static_cast<std::uint32_t>(t);
    if (key_less(f, obj, nodes_[ut].freq, nodes_[ut].obj)) {
      nodes_[ut].left = erase_at(nodes_[ut].left, f, obj);
    } else if (key_less(nodes_[ut].freq, nodes_[ut].obj, f, obj)) {
      nodes_[ut].right = erase_at(nodes_[ut].right, f, obj);
    } else {
      if (nodes_[ut].left < 0 || nodes_[ut].right < 0) {
        const std::int32_t child =
            nodes_[ut].left < 0 ? nodes_[ut].right : nodes_[ut].left;
        free_node(t);
        return child;
      }
      std::int32_t succ = nodes_[ut].right;
      while (nodes_[static_cast<std::uint32_t>(succ)].left >= 0) {
        succ = nodes_[static_cast<std::uint32_t>(succ)].left;
      }
      const frequency_t sf = nodes_[static_cast<std::uint32_t>(succ)].freq;
      const object_id so = nodes_[static_cast<std::uint32_t>(succ)].obj;
      nodes_[ut].freq = sf;
      nodes_[ut].obj = so;
      nodes_[ut].right = erase_at(nodes_[ut].right, sf, so);
    }
    return rebalance(t);
  }

  std::uint32_t audit_at(std::int32_t t, bool& have_prev, frequency_t& pf,
                         object_id& po) const {
    if (t < 0) return 0;
    const Node& n = nodes_[static_cast<std::uint32_t>(t)];
    const std::uint32_t ls = audit_at(n.left, have_prev, pf, po);
    if (have_prev && !key_less(pf, po, n.freq, n.obj)) {
      throw std::logic_error("OrderStatisticTree audit: in-order not strictly sorted");
    }
    have_prev = true;
    pf = n.freq;
    po = n.obj;
    const std::uint32_t rs = audit_at(n.right, have_prev, pf, po);
    if (n.size != ls + rs + 1) {
      throw std::logic_error("OrderStatisticTree audit: subtree size inconsistent");
    }
    const std::int32_t expect_h =
        1 + std::max(subtree_height(n.left), subtree_height(n.right));
    if (n.height != expect_h) {
      throw std::logic_error("OrderStatisticTree audit: height inconsistent");
    }
    if (subtree_height(n.left) - subtree_height(n.right) > 1 ||
        subtree_height(n.right) - subtree_height(n.left) > 1) {
      throw std::logic_error("OrderStatisticTree audit: AVL balance violated");
    }
    return ls + rs + 1;
  }

  std::vector<frequency_t> freq_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  std::int32_t free_head_ = -1;
};

}  // namespace sprofile

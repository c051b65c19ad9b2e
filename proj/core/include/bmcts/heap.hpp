#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bmcts {

/// Binary max-heap over a fixed set of indices 0..n-1 with mutable keys.
/// update() is O(log n), the top index/key reads are O(1).
class IndexedMaxHeap {
public:
    IndexedMaxHeap() = default;

    explicit IndexedMaxHeap(std::span<const double> keys)
        : keys_(keys.begin(), keys.end()), heap_(keys.size()), pos_(keys.size()) {
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            heap_[i] = i;
            pos_[i] = i;
        }
        for (std::size_t i = keys_.size() / 2; i-- > 0;) sift_down(i);
    }

    std::size_t size() const { return keys_.size(); }
    bool empty() const { return keys_.empty(); }

    std::size_t top_index() const { return heap_[0]; }
    double top_key() const { return keys_[heap_[0]]; }
    double key(std::size_t index) const { return keys_[index]; }

    void update(std::size_t index, double key) {
        const double old = keys_[index];
        keys_[index] = key;
        if (key > old) {
            sift_up(pos_[index]);
        } else if (key < old) {
            sift_down(pos_[index]);
        }
    }

private:
    void sift_up(std::size_t h) {
        while (h > 0) {
            const std::size_t parent = (h - 1) / 2;
            if (keys_[heap_[parent]] >= keys_[heap_[h]]) break;
            swap_entries(h, parent);
            h = parent;
        }
    }

    void sift_down(std::size_t h) {
        const std::size_t n = heap_.size();
        while (true) {
            std::size_t best = h;
            const std::size_t l = 2 * h + 1, r = 2 * h + 2;
            if (l < n && keys_[heap_[l]] > keys_[heap_[best]]) best = l;
            if (r < n && keys_[heap_[r]] > keys_[heap_[best]]) best = r;
            if (best == h) break;
            swap_entries(h, best);
            h = best;
        }
    }

    void swap_entries(std::size_t a, std::size_t b) {
        std::swap(heap_[a], heap_[b]);
        pos_[heap_[a]] = a;
        pos_[heap_[b]] = b;
    }

    std::vector<double> keys_;
    std::vector<std::size_t> heap_;
    std::vector<std::size_t> pos_;
};

}  // namespace bmcts

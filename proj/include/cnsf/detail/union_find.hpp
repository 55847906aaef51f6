#pragma once

#include <numeric>
#include <vector>

namespace cnsf::detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

} // namespace cnsf::detail

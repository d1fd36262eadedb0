#include "tzeta/stuffle.hpp"

#include <sstream>

namespace tzeta {

namespace {

void add_term(IndexCombination& acc, const Index& idx, long coef) {
    auto [it, fresh] = acc.emplace(idx, coef);
    if (!fresh && (it->second += coef) == 0) acc.erase(it);
}

std::vector<int> cons(int head, const std::vector<int>& tail) {
    std::vector<int> v;
    v.reserve(tail.size() + 1);
    v.push_back(head);
    v.insert(v.end(), tail.begin(), tail.end());
    return v;
}

IndexCombination stuffle(const std::vector<int>& a, const std::vector<int>& b) {
    IndexCombination acc;
    if (a.empty()) {
        add_term(acc, Index(b), 1);
        return acc;
    }
    if (b.empty()) {
        add_term(acc, Index(a), 1);
        return acc;
    }
    std::vector<int> at(a.begin() + 1, a.end());
    std::vector<int> bt(b.begin() + 1, b.end());
    for (const auto& [idx, c] : stuffle(at, b)) add_term(acc, Index(cons(a[0], idx.parts())), c);
    for (const auto& [idx, c] : stuffle(a, bt)) add_term(acc, Index(cons(b[0], idx.parts())), c);
    for (const auto& [idx, c] : stuffle(at, bt))
        add_term(acc, Index(cons(a[0] + b[0], idx.parts())), c);
    return acc;
}

}  // namespace

IndexCombination stuffle_product(const Index& a, const Index& b) {
    return stuffle(a.parts(), b.parts());
}

std::string combination_str(const IndexCombination& c) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, coef] : c) {
        if (!first) os << " + ";
        first = false;
        if (coef != 1) os << coef << "*";
        os << "(" << idx.str() << ")";
    }
    return first ? "0" : os.str();
}

}  // namespace tzeta

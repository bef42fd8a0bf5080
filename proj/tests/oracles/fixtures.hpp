#pragma once

// Compact tree literals for tests: "r[a,b[]]" is a root r carrying a vertex
// with a leaf a and an edge b topped by a stump.

#include "dendrex/tree.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fixture {

inline dendrex::TreeNode parse_node(std::string_view s, std::size_t& i) {
    std::size_t const start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '~')) {
        ++i;
    }
    if (i == start) {
        throw std::runtime_error("fixture: expected an edge name at " + std::to_string(i));
    }
    std::string name(s.substr(start, i - start));
    if (i < s.size() && s[i] == '[') {
        ++i;
        std::vector<dendrex::TreeNode> children;
        if (s[i] != ']') {
            while (true) {
                children.push_back(parse_node(s, i));
                if (s[i] == ',') {
                    ++i;
                    continue;
                }
                break;
            }
        }
        if (s[i] != ']') {
            throw std::runtime_error("fixture: expected ']'");
        }
        ++i;
        return dendrex::TreeNode::vertex(std::move(name), std::move(children));
    }
    return dendrex::TreeNode::leaf(std::move(name));
}

inline dendrex::Tree tree(std::string_view s) {
    std::size_t i = 0;
    auto node = parse_node(s, i);
    if (i != s.size()) {
        throw std::runtime_error("fixture: trailing input");
    }
    return dendrex::Tree::from_node(node);
}

// Named trees shared by several tests.
inline dendrex::Tree contraction_example() { return tree("f[e[a,b],c,d[]]"); }
inline dendrex::Tree top_outer_example() { return tree("a[b[e,f],c,d[]]"); }
inline dendrex::Tree root_outer_example() { return tree("r[a[e,f,c,d[]]]"); }
// l1, l2 enter v; e1 leaves v; w is a stump on e2; root r.
inline dendrex::Tree branch_stump_tree() { return tree("r[e1[l1,l2],e2[]]"); }

}  // namespace fixture

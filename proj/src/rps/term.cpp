#include "lff/rps/term.hpp"

#include <algorithm>
#include <set>

namespace lff::rps {

bool operator==(const Term& a, const Term& b)
{
    return a.kind == b.kind && a.name == b.name && a.args == b.args;
}

std::strong_ordering operator<=>(const Term& a, const Term& b)
{
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.name <=> b.name; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

bool operator==(const TreePrefix& a, const TreePrefix& b)
{
    return a.kind == b.kind && a.name == b.name && a.children == b.children;
}

std::strong_ordering operator<=>(const TreePrefix& a, const TreePrefix& b)
{
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.name <=> b.name; c != 0) return c;
    return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(), b.children.begin(),
                                                  b.children.end());
}

bool TreePrefix::complete() const
{
    if (is_bottom()) return false;
    return std::all_of(children.begin(), children.end(), [](const TreePrefix& c) { return c.complete(); });
}

namespace {

void write(std::string& out, const Term& t)
{
    out += t.name;
    if (t.args.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i > 0) out += ',';
        write(out, t.args[i]);
    }
    out += ')';
}

void write_prefix(std::string& out, const TreePrefix& t)
{
    if (t.is_bottom()) {
        out += "⊥";
        return;
    }
    out += t.name;
    if (t.children.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i > 0) out += ',';
        write_prefix(out, t.children[i]);
    }
    out += ')';
}

bool collect(const TreePrefix& t, std::set<TreePrefix>& complete)
{
    if (t.is_bottom()) return false;
    bool all = true;
    for (const auto& c : t.children) all = collect(c, complete) && all;
    if (all) complete.insert(t);
    return all;
}

}  // namespace

std::string to_string(const Term& t)
{
    std::string out;
    write(out, t);
    return out;
}

std::string to_string(const TreePrefix& t)
{
    std::string out;
    write_prefix(out, t);
    return out;
}

bool is_prefix_of(const TreePrefix& a, const TreePrefix& b)
{
    if (a.is_bottom()) return true;
    if (a.kind != b.kind || a.name != b.name || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!is_prefix_of(a.children[i], b.children[i])) return false;
    return true;
}

std::size_t subtree_census(const TreePrefix& p)
{
    std::set<TreePrefix> complete;
    collect(p, complete);
    return complete.size();
}

}  // namespace lff::rps

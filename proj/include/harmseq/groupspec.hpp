#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "harmseq/group.hpp"

namespace harmseq {

// Parse tree for the CLI group grammar:
//   spec := atom { "x" atom }
//   atom := "Z" INT | "D" INT | "SD(" spec ";" spec ";" INT {"," INT} ")" | "Table(" PATH ")"
struct GroupSpecAST {
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Cyclic { int n; };
    struct Dihedral { int order; };
    struct Product { NodePtr a, b; };
    struct Semidirect { NodePtr k, h; std::vector<long long> multipliers; };
    struct Table { std::string path; };
    struct Node {
        std::variant<Cyclic, Dihedral, Product, Semidirect, Table> v;
    };
    NodePtr root;
};

// Throws InputError carrying the byte offset of the first bad token.
GroupSpecAST parse_group_spec(std::string_view text);

std::string canonical_spec(const GroupSpecAST& ast);

// Builds the group; Table() paths are opened relative to the process cwd.
GroupPtr realize_group(const GroupSpecAST& ast);

}  // namespace harmseq

// Linear systems in matrix-valued unknowns: sum_k A_k X_{blk_k} B_k = C.
// Used for chain homotopies, random chain-map sampling, and map-counting oracles.
#pragma once

#include "mgc/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mgc {

struct VarSpace {
    struct Block {
        int rows, cols, offset;
    };
    std::map<std::string, Block> blocks;
    int total = 0;

    void add(const std::string& name, int rows, int cols) {
        blocks[name] = Block{rows, cols, total};
        total += rows * cols;
    }
    bool has(const std::string& name) const { return blocks.count(name) > 0; }
};

struct MatEq {
    struct Term {
        Matrix a;        // left factor
        std::string blk; // unknown block name
        Matrix b;        // right factor
    };
    std::vector<Term> terms;
    Matrix c; // right-hand side
};

// Particular solution; nullopt when inconsistent.
std::optional<std::map<std::string, Matrix>> solve_blocks(const VarSpace& vars,
                                                          const std::vector<MatEq>& eqs);

// Basis of the homogeneous solution space (rhs ignored).
std::vector<std::map<std::string, Matrix>> kernel_blocks(const VarSpace& vars,
                                                         const std::vector<MatEq>& eqs);

// Dimension of the affine solution set (-1 when inconsistent).
int solution_dim(const VarSpace& vars, const std::vector<MatEq>& eqs);

} // namespace mgc

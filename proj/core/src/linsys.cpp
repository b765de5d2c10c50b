#include "mgc/linsys.hpp"

#include <stdexcept>

namespace mgc {

namespace {

// Assemble the flat system M x = r over all equations.
void assemble(const VarSpace& vars, const std::vector<MatEq>& eqs, Matrix& m, Matrix& r) {
    int n_rows = 0;
    for (const auto& eq : eqs) n_rows += eq.c.rows * eq.c.cols;
    m = Matrix(n_rows, vars.total);
    r = Matrix(n_rows, 1);
    int row0 = 0;
    for (const auto& eq : eqs) {
        const int er = eq.c.rows, ec = eq.c.cols;
        for (const auto& t : eq.terms) {
            auto it = vars.blocks.find(t.blk);
            if (it == vars.blocks.end()) throw std::invalid_argument("unknown block " + t.blk);
            const auto& blk = it->second;
            if (t.a.cols != blk.rows || t.b.rows != blk.cols || t.a.rows != er || t.b.cols != ec)
                throw std::invalid_argument("matrix equation shape mismatch on block " + t.blk);
            // (A X B)_{rc} = sum_{ij} A_{ri} B_{jc} X_{ij}
            for (int rr = 0; rr < er; ++rr)
                for (int i = 0; i < blk.rows; ++i) {
                    const Rational& ari = t.a.at(rr, i);
                    if (ari == 0) continue;
                    for (int j = 0; j < blk.cols; ++j)
                        for (int cc = 0; cc < ec; ++cc) {
                            const Rational& bjc = t.b.at(j, cc);
                            if (bjc == 0) continue;
                            m.at(row0 + rr * ec + cc, blk.offset + i * blk.cols + j) += ari * bjc;
                        }
                }
        }
        for (int rr = 0; rr < er; ++rr)
            for (int cc = 0; cc < ec; ++cc) r.at(row0 + rr * ec + cc, 0) = eq.c.at(rr, cc);
        row0 += er * ec;
    }
}

std::map<std::string, Matrix> unflatten(const VarSpace& vars, const Matrix& x, int col) {
    std::map<std::string, Matrix> out;
    for (const auto& [name, blk] : vars.blocks) {
        Matrix b(blk.rows, blk.cols);
        for (int i = 0; i < blk.rows; ++i)
            for (int j = 0; j < blk.cols; ++j) b.at(i, j) = x.at(blk.offset + i * blk.cols + j, col);
        out[name] = b;
    }
    return out;
}

} // namespace

std::optional<std::map<std::string, Matrix>> solve_blocks(const VarSpace& vars,
                                                          const std::vector<MatEq>& eqs) {
    Matrix m, r;
    assemble(vars, eqs, m, r);
    auto x = solve(m, r);
    if (!x) return std::nullopt;
    return unflatten(vars, *x, 0);
}

std::vector<std::map<std::string, Matrix>> kernel_blocks(const VarSpace& vars,
                                                         const std::vector<MatEq>& eqs) {
    Matrix m, r;
    assemble(vars, eqs, m, r);
    Matrix k = reduce(m).kernel;
    std::vector<std::map<std::string, Matrix>> out;
    for (int j = 0; j < k.cols; ++j) out.push_back(unflatten(vars, k, j));
    return out;
}

int solution_dim(const VarSpace& vars, const std::vector<MatEq>& eqs) {
    Matrix m, r;
    assemble(vars, eqs, m, r);
    if (!solve(m, r)) return -1;
    return vars.total - reduce(m).rank;
}

} // namespace mgc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cpn/rational.hpp"

namespace cpn {

/// Element of M_n(C)^{⊗k}: sparse sum of elementary tensors
/// E_{a1,b1}⊗...⊗E_{ak,bk}, keyed by the flat 1-based index tuple
/// (a1, b1, ..., ak, bk).
class MatTensor {
public:
    MatTensor(int n, int k) : n_(n), k_(k) {}

    static MatTensor zero(int n, int k) { return MatTensor(n, k); }
    /// E_{ab} as a length-1 tensor
    static MatTensor unit(int n, int a, int b);
    /// identity matrix as a length-1 tensor
    static MatTensor identity(int n);

    int n() const { return n_; }
    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, GaussianRational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& tuple, const GaussianRational& c);

    MatTensor operator-() const;
    MatTensor& operator+=(const MatTensor& o);
    MatTensor& operator-=(const MatTensor& o);
    friend MatTensor operator+(MatTensor a, const MatTensor& b) { return a += b; }
    friend MatTensor operator-(MatTensor a, const MatTensor& b) { return a -= b; }
    MatTensor operator*(const GaussianRational& c) const;

    friend bool operator==(const MatTensor& a, const MatTensor& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MatTensor& a, const MatTensor& b) { return !(a == b); }

    std::string str() const;
    static MatTensor parse(int n, const std::string& text);

private:
    int n_, k_;
    std::map<std::vector<int>, GaussianRational> terms_;
};

/// Outer tensor product (lengths add).
MatTensor tensor(const MatTensor& x, const MatTensor& y);

/// d a = 1⊗a − a⊗1 on a length-1 tensor.
MatTensor d_uni_0(const MatTensor& a);

/// Alternating identity insertions: d(a1⊗...⊗ak) = Σ_{i=0..k} (−1)^i
/// a1⊗...⊗a_i⊗1⊗a_{i+1}⊗...⊗ak. Satisfies d∘d = 0 exactly.
MatTensor d_uni(const MatTensor& x);

/// Junction product: multiply the last factor of x into the first factor
/// of y, so lengths add minus one. Associative; restricts to the product
/// of universal forms.
MatTensor uni_product(const MatTensor& x, const MatTensor& y);

/// True iff every neighbouring multiplication map kills x, i.e. x lies in
/// the degree-(k−1) universal calculus inside M_n^{⊗k}.
bool is_universal_form(const MatTensor& x);

/// Linearly independent spanning set of the degree-m universal calculus on
/// M_n, of size n²(n²−1)^m, obtained by row-reducing the elementary
/// products E_{c0}·d(E_{c1})·...·d(E_{cm}).
std::vector<MatTensor> uni_basis(int m, int n);

}  // namespace cpn

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssclust/types.hpp"

namespace ssclust::nn {

// Batched layout conventions:
//   dense activations    : features x B (columns = samples)
//   conv feature maps    : channels x (H*W*B), per-sample blocks of H*W columns
//   sequences            : T x B (scalar series) or vectors of H x B per step
// All convolutions in this project are 3x3, stride 2, pad 1; transposed
// convolutions additionally use output padding 1 so sizes exactly double.

constexpr int kKernel = 3;
constexpr int kStride = 2;
constexpr int kPad = 1;

inline int conv_out_size(int in) { return (in + 2 * kPad - kKernel) / kStride + 1; }
inline int deconv_out_size(int in) { return kStride * (in - 1) + kKernel - 2 * kPad + 1; }

// ---- elementwise activations ----------------------------------------------

Matrix relu(const Matrix& z);
Matrix relu_backward(const Matrix& z, const Matrix& da);  // mask from pre-activation
Matrix sigmoid(const Matrix& z);
Matrix sigmoid_backward_from_y(const Matrix& y, const Matrix& dy);

// ---- dense -----------------------------------------------------------------

struct Dense {
    Matrix W;  // out x in
    Matrix b;  // out x 1
};

Matrix dense_forward(const Dense& p, const Matrix& x);
// Accumulates into grad; dx optional.
void dense_backward(const Dense& p, const Matrix& x, const Matrix& dy, Dense& grad, Matrix* dx);

// ---- conv / transposed conv -------------------------------------------------

struct Conv {
    Matrix W;  // out_ch x (in_ch*9)
    Matrix b;  // out_ch x 1
    int in_ch = 0, out_ch = 0;
};

struct Deconv {
    Matrix W;  // in_ch x (out_ch*9)
    Matrix b;  // out_ch x 1
    int in_ch = 0, out_ch = 0;
};

Matrix im2col(const Matrix& x, int H, int W, int B);
Matrix col2im(const Matrix& col, int H, int W, int B, int ch);

// x: in_ch x (H*W*B); returns out_ch x (Ho*Wo*B); caches the col matrix.
Matrix conv_forward(const Conv& p, const Matrix& x, int H, int W, int B, Matrix* col_cache);
void conv_backward(const Conv& p, const Matrix& col_cache, const Matrix& dy, int H, int W, int B, Conv& grad,
                   Matrix* dx);

// x: in_ch x (H*W*B); returns out_ch x (2H*2W*B).
Matrix deconv_forward(const Deconv& p, const Matrix& x, int H, int W, int B);
void deconv_backward(const Deconv& p, const Matrix& x, const Matrix& dy, int H, int W, int B, Deconv& grad,
                     Matrix* dx);

// ---- LSTM (scalar input) ----------------------------------------------------

struct Lstm {
    Matrix Wx;  // 4H x 1, gate order i,f,g,o
    Matrix Wh;  // 4H x H
    Matrix b;   // 4H x 1
    int hidden() const { return static_cast<int>(Wh.cols()); }
};

struct LstmStepCache {
    Matrix i, f, g, o;       // post-nonlinearity gates, H x B
    Matrix c, tanh_c, h;     // cell, tanh(cell), hidden
    Matrix x;                // 1 x B input
    Matrix h_prev, c_prev;   // entering state
};

void lstm_step_forward(const Lstm& p, const Matrix& x, const Matrix& h_prev, const Matrix& c_prev,
                       LstmStepCache& cache);
// dh/dc are gradients on this step's outputs; emits gradients on the inputs.
void lstm_step_backward(const Lstm& p, const LstmStepCache& cache, const Matrix& dh, const Matrix& dc, Lstm& grad,
                        Matrix* dx, Matrix* dh_prev, Matrix* dc_prev);

struct LstmSeqCache {
    std::vector<LstmStepCache> steps;
};

// Runs over rows of x (T x B) in the given order; returns the terminal hidden state.
Matrix lstm_forward(const Lstm& p, const Matrix& x, bool reverse_time, LstmSeqCache& cache);
// Terminal-gradient-only BPTT (the encoder consumes only the final state).
void lstm_backward(const Lstm& p, const Matrix& x, bool reverse_time, const LstmSeqCache& cache,
                   const Matrix& dh_terminal, Lstm& grad, Matrix* dx);

// ---- optimizer ---------------------------------------------------------------

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    std::vector<Matrix> m, v;
    long step = 0;

    void init_like(const std::vector<Matrix*>& params);
};

void adam_step(const std::vector<Matrix*>& params, const std::vector<const Matrix*>& grads, AdamState& state,
               const AdamConfig& cfg);

// ---- init --------------------------------------------------------------------

// Fan-in-scaled normal init; biases zero (LSTM forget-gate bias 1).
Matrix init_matrix(int rows, int cols, int fan_in, std::mt19937_64& rng);

}  // namespace ssclust::nn

#include "subsim/sim/phasor.hpp"

#include <cmath>

namespace subsim::sim {

PhasorEstimator::PhasorEstimator(int samples_per_cycle)
    : spc_(samples_per_cycle), window_(samples_per_cycle / 2) {
    cos_table_.resize(spc_);
    sin_table_.resize(spc_);
    for (int k = 0; k < spc_; ++k) {
        const double a = 2.0 * M_PI * k / spc_;
        cos_table_[k] = std::cos(a);
        sin_table_[k] = std::sin(a);
    }
    buf_.assign(window_, {-1, 0.0});
}

void PhasorEstimator::reset() {
    head_ = 0;
    count_ = 0;
    last_tick_ = -1;
    sum_c_ = sum_s_ = 0.0;
    pushes_ = 0;
    for (auto& e : buf_) e = {-1, 0.0};
}

void PhasorEstimator::push(Tick t, double sample) {
    const int phase = static_cast<int>(((t % spc_) + spc_) % spc_);
    if (count_ > 0 && t == last_tick_) {
        // Replace the newest sample.
        const int idx = (head_ + window_ - 1) % window_;
        const int ph = static_cast<int>(((buf_[idx].t % spc_) + spc_) % spc_);
        sum_c_ -= buf_[idx].x * cos_table_[ph];
        sum_s_ -= buf_[idx].x * sin_table_[ph];
        buf_[idx].x = sample;
        sum_c_ += sample * cos_table_[ph];
        sum_s_ += sample * sin_table_[ph];
        return;
    }
    if (count_ == window_) {
        const Entry& old = buf_[head_];
        const int ph = static_cast<int>(((old.t % spc_) + spc_) % spc_);
        sum_c_ -= old.x * cos_table_[ph];
        sum_s_ -= old.x * sin_table_[ph];
        --count_;
    }
    buf_[head_] = {t, sample};
    head_ = (head_ + 1) % window_;
    ++count_;
    last_tick_ = t;
    sum_c_ += sample * cos_table_[phase];
    sum_s_ += sample * sin_table_[phase];
    if (++pushes_ >= 4 * spc_) rebuild_sums(); // shed float drift
}

void PhasorEstimator::rebuild_sums() {
    pushes_ = 0;
    sum_c_ = sum_s_ = 0.0;
    for (int i = 0; i < count_; ++i) {
        const Entry& e = buf_[(head_ + window_ - count_ + i) % window_];
        const int ph = static_cast<int>(((e.t % spc_) + spc_) % spc_);
        sum_c_ += e.x * cos_table_[ph];
        sum_s_ += e.x * sin_table_[ph];
    }
}

bool PhasorEstimator::valid() const {
    if (count_ < window_) return false;
    const Entry& oldest = buf_[head_ % window_];
    return last_tick_ - oldest.t == window_ - 1; // contiguous window
}

std::complex<double> PhasorEstimator::phasor() const {
    // x(t) = sqrt(2)|X| cos(wt + arg X)  =>  correlation yields X directly.
    const double scale = 2.0 / window_ / std::sqrt(2.0);
    return {scale * sum_c_, -scale * sum_s_};
}

} // namespace subsim::sim

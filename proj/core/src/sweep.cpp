#include "sweep.hpp"

namespace pnspace::detail {

void Cursor::eval(double x, double& at, double& after) {
  const std::size_t n = knots_.size();
  if (pos_ < n && knots_[pos_].x - shift_ == x) {
    at = knots_[pos_].at;
    after = knots_[pos_].after;
    ++pos_;
    return;
  }
  // Strictly between knots pos_-1 and pos_ in sweep coordinates. Rounding of
  // x + shift can still land exactly on a neighbouring knot.
  const double u = x + shift_;
  if (pos_ < n && knots_[pos_].x == u) {
    at = knots_[pos_].at;
    after = knots_[pos_].after;
    return;
  }
  if (pos_ == 0) {
    at = after = knots_.front().at;
    return;
  }
  const Knot& l = knots_[pos_ - 1];
  if (l.x == u) {
    at = l.at;
    after = l.after;
    return;
  }
  if (pos_ == n || u < l.x) {
    at = after = l.after;
    return;
  }
  const Knot& r = knots_[pos_];
  if (l.after == r.at) {
    at = after = r.at;
    return;
  }
  const double t = (u - l.x) / (r.x - l.x);
  at = after = std::clamp(l.after + t * (r.at - l.after), l.after, r.at);
}

}  // namespace pnspace::detail

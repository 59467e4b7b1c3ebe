#include "belyi/free_group.hpp"

#include <sstream>

#include "belyi/error.hpp"

namespace belyi {

FreeWord::FreeWord(const std::vector<int>& letters) {
  for (int a : letters) {
    require(a != 0, "letter 0 in free word");
    if (!l_.empty() && l_.back() == -a)
      l_.pop_back();
    else
      l_.push_back(a);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) w.l_.push_back(-*it);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> v(l_);
  v.insert(v.end(), o.l_.begin(), o.l_.end());
  return FreeWord(v);
}

std::string FreeWord::str() const {
  static const char* names = "xyzuvw";
  if (l_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < l_.size();) {
    int a = l_[i];
    std::size_t j = i;
    while (j < l_.size() && l_[j] == a) ++j;
    int g = a > 0 ? a : -a;
    if (i) os << ' ';
    if (g <= 6)
      os << names[g - 1];
    else
      os << 'x' << g;
    long long e = static_cast<long long>(j - i) * (a > 0 ? 1 : -1);
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

SchreierData::SchreierData(const CayleyGroup& h, const std::vector<int>& images)
    : h_(h), images_(images) {
  const int n = h.order();
  const int d = static_cast<int>(images.size());
  for (int v : images) require(v >= 0 && v < n, "generator image out of range");
  require(h.generates(images), "images do not generate the group");
  // Breadth-first search in the letter order x1 < x1^-1 < x2 < ... gives the
  // shortlex-least word for every element, a Schreier transversal.
  trans_.assign(n, FreeWord());
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (int i = 1; i <= d; ++i)
      for (int s : {i, -i}) {
        int y = h.mul(x, s > 0 ? images[i - 1] : h.inv(images[i - 1]));
        if (seen[y]) continue;
        seen[y] = 1;
        trans_[y] = trans_[x] * FreeWord::generator(s);
        queue.push_back(y);
      }
  }
  slot_.assign(n, std::vector<int>(d, -1));
  for (int t : queue) {  // transversal elements in shortlex order
    for (int i = 1; i <= d; ++i) {
      int y = h.mul(t, images[i - 1]);
      FreeWord w = trans_[t] * FreeWord::generator(i) * trans_[y].inverse();
      if (w.empty()) continue;
      slot_[t][i - 1] = static_cast<int>(free_gens_.size());
      free_gens_.push_back(w);
    }
  }
  ensure(rank() == n * (d - 1) + 1, "Schreier generator count differs from |H|(d-1)+1");
}

int SchreierData::evaluate(const FreeWord& w) const {
  int x = 0;
  for (int a : w.letters()) {
    int g = images_[std::abs(a) - 1];
    x = h_.mul(x, a > 0 ? g : h_.inv(g));
  }
  return x;
}

std::vector<long long> SchreierData::rewrite(const FreeWord& w) const {
  std::vector<long long> v(rank(), 0);
  int t = 0;
  for (int a : w.letters()) {
    int i = std::abs(a) - 1;
    if (a > 0) {
      int s = slot_[t][i];
      if (s >= 0) ++v[s];
      t = h_.mul(t, images_[i]);
    } else {
      t = h_.mul(t, h_.inv(images_[i]));
      int s = slot_[t][i];
      if (s >= 0) --v[s];
    }
  }
  require(t == 0, "word is not in the kernel");
  return v;
}

std::vector<std::vector<long long>> SchreierData::action_matrix(int h) const {
  const int r = rank();
  std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
  const FreeWord& t = trans_[h];
  FreeWord ti = t.inverse();
  for (int j = 0; j < r; ++j) {
    auto col = rewrite(t * free_gens_[j] * ti);
    for (int i = 0; i < r; ++i) m[i][j] = col[i];
  }
  return m;
}

}  // namespace belyi

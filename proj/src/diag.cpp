#include "recurpart/diag.hpp"

#include <mutex>

namespace recurpart::diag {

namespace {
std::mutex g_mu;
std::vector<std::string> g_warnings;
std::map<std::string, long long> g_cuts;
}  // namespace

void warn(const std::string& message) {
  std::lock_guard<std::mutex> lock(g_mu);
  g_warnings.push_back(message);
}

std::vector<std::string> drain_warnings() {
  std::lock_guard<std::mutex> lock(g_mu);
  std::vector<std::string> out;
  out.swap(g_warnings);
  return out;
}

void record_cut(const std::string& series, long long index) {
  std::lock_guard<std::mutex> lock(g_mu);
  g_cuts[series] = index;
}

std::map<std::string, long long> cuts() {
  std::lock_guard<std::mutex> lock(g_mu);
  return g_cuts;
}

}  // namespace recurpart::diag

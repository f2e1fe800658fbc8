/*
   Copyright 2026 The abcover Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ABCOVER_FETCH_HPP
#define ABCOVER_FETCH_HPP

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "abcover/lmfdb.hpp"

namespace abcover {

struct FetchConfig {
    std::string base_url = "https://www.lmfdb.org";
    std::string endpoint = "/api/av_fq_isog/";
    std::filesystem::path cache_dir;  // empty disables caching
    std::string query_revision = "r1";
    bool allow_network = true;
    std::chrono::milliseconds min_request_interval{500};
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{500};
    std::chrono::seconds timeout{30};

    /// Applies ABCOVER_LMFDB_URL and ABCOVER_CACHE_DIR when set.
    static FetchConfig from_environment();
};

/// Pages through the isogeny-class API for a fixed (g, q). Requests made by
/// one client are serialized and spaced by min_request_interval.
///
/// The on-disk cache holds one file per (g, q, query revision). A readable
/// cache file is returned without touching the network; an unreadable or
/// truncated one is ignored and rewritten.
class LmfdbClient {
   public:
    explicit LmfdbClient(FetchConfig config) : config_(std::move(config)) {}

    std::vector<CandidateRecord> fetch_candidates(std::uint64_t q, int genus);

    std::filesystem::path cache_path(const FieldSize& field, int genus) const;
    std::size_t requests_made() const noexcept { return requests_; }

   private:
    std::optional<std::vector<CandidateRecord>> read_cache(const std::filesystem::path& path) const;
    void write_cache(const std::filesystem::path& path, const std::vector<CandidateRecord>& records,
                     const std::string& source) const;
    std::string get_with_retry(const std::string& path_and_query);

    FetchConfig config_;
    std::mutex mutex_;
    std::optional<std::chrono::steady_clock::time_point> last_request_;
    std::size_t requests_ = 0;
};

std::vector<CandidateRecord> fetch_candidates(std::uint64_t q, int genus, const FetchConfig& config);

}  // namespace abcover

#endif

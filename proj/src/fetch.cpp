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

#include "abcover/fetch.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#include "abcover/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace abcover {

namespace {

constexpr const char* kCacheMagic = "# abcover lmfdb cache v1";
constexpr int kMaxPages = 100000;

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::optional<std::uint64_t> evidence_of(const nlohmann::json& item) {
    if (const auto jc = item.find("jacobian_count"); jc != item.end() && jc->is_number_unsigned())
        return jc->get<std::uint64_t>();
    if (const auto hj = item.find("has_jacobian"); hj != item.end() && hj->is_number_integer()) {
        const auto v = hj->get<int>();
        if (v == 1) return 1;
        if (v == -1) return 0;
    }
    return std::nullopt;
}

CandidateRecord normalize(const nlohmann::json& item, const FieldSize& field, int genus, const std::string& source) {
    if (!item.is_object() || !item.contains("label") || !item["label"].is_string())
        throw Error(ErrorKind::ResponseShape, "record without a string label");
    const auto text = item["label"].get<std::string>();
    CandidateRecord record = [&] {
        try {
            return make_candidate(text, evidence_of(item), source);
        } catch (const Error& e) {
            throw Error(ErrorKind::ResponseShape, "record '" + text + "': " + e.what());
        }
    }();
    if (record.lpoly.genus() != genus || record.lpoly.field() != field)
        throw Error(ErrorKind::ResponseShape, "record '" + text + "' does not match the requested (g, q)");
    if (const auto poly = item.find("poly"); poly != item.end()) {
        const auto coeffs = record.lpoly.coefficients();
        bool same = poly->is_array() && poly->size() == coeffs.size();
        for (std::size_t k = 0; same && k < coeffs.size(); ++k)
            same = (*poly)[k].is_number_integer() && Integer((*poly)[k].get<long>()) == coeffs[k];
        if (!same) throw Error(ErrorKind::ResponseShape, "record '" + text + "': poly disagrees with label");
    }
    return record;
}

}  // namespace

FetchConfig FetchConfig::from_environment() {
    FetchConfig config;
    if (const char* url = std::getenv("ABCOVER_LMFDB_URL"); url && *url) config.base_url = url;
    if (const char* dir = std::getenv("ABCOVER_CACHE_DIR"); dir && *dir) config.cache_dir = dir;
    return config;
}

std::filesystem::path LmfdbClient::cache_path(const FieldSize& field, int genus) const {
    return config_.cache_dir /
           ("av_fq_isog_g" + std::to_string(genus) + "_q" + field.to_string() + "_" + config_.query_revision + ".jsonl");
}

std::optional<std::vector<CandidateRecord>> LmfdbClient::read_cache(const std::filesystem::path& path) const {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string magic, source_line, body, line, trailer;
    if (!std::getline(in, magic) || magic != kCacheMagic) return std::nullopt;
    if (!std::getline(in, source_line) || source_line.rfind("# source: ", 0) != 0) return std::nullopt;
    while (std::getline(in, line)) {
        if (line.rfind("# end ", 0) == 0) {
            trailer = line;
            break;
        }
        body += line + '\n';
    }
    if (trailer.empty()) return std::nullopt;
    try {
        std::istringstream records_in(body);
        auto parsed = parse_dataset(records_in, {true, path.string()});
        if (std::to_string(parsed.records.size()) != trailer.substr(6)) return std::nullopt;
        const std::string source = source_line.substr(10);
        for (auto& r : parsed.records) r.source = source;
        return std::move(parsed.records);
    } catch (const Error&) {
        return std::nullopt;
    }
}

void LmfdbClient::write_cache(const std::filesystem::path& path, const std::vector<CandidateRecord>& records,
                              const std::string& source) const {
    std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << kCacheMagic << '\n' << "# source: " << source << '\n' << to_jsonl(records) << "# end "
            << records.size() << '\n';
        if (!out) throw Error(ErrorKind::Internal, "cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string LmfdbClient::get_with_retry(const std::string& path_and_query) {
    if (!config_.allow_network) throw Error(ErrorKind::Network, "network access disabled by configuration");
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(config_.timeout);
    client.set_read_timeout(config_.timeout);
    client.set_follow_location(true);
    const httplib::Headers headers{{"User-Agent", "abcover/0.1"}, {"Accept", "application/json"}};

    auto backoff = config_.initial_backoff;
    std::string last_error;
    for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
        if (last_request_) std::this_thread::sleep_until(*last_request_ + config_.min_request_interval);
        last_request_ = std::chrono::steady_clock::now();
        ++requests_;
        auto res = client.Get(path_and_query, headers);
        if (res && res->status == 200) return res->body;
        if (res) {
            last_error = "HTTP " + std::to_string(res->status);
            if (res->status >= 400 && res->status < 500 && res->status != 429) break;
        } else {
            last_error = httplib::to_string(res.error());
        }
        if (attempt < config_.max_attempts) {
            std::this_thread::sleep_for(backoff);
            backoff *= 2;
        }
    }
    throw Error(ErrorKind::Network, "GET " + config_.base_url + path_and_query + " failed: " + last_error);
}

std::vector<CandidateRecord> LmfdbClient::fetch_candidates(std::uint64_t q, int genus) {
    const FieldSize field = FieldSize::from_cardinality(q);
    if (genus < 1) throw Error(ErrorKind::MalformedInput, "genus must be at least 1");
    std::lock_guard lock(mutex_);

    const bool cached = !config_.cache_dir.empty();
    if (cached)
        if (auto hit = read_cache(cache_path(field, genus))) return std::move(*hit);

    const std::string query = config_.endpoint + "?g=" + std::to_string(genus) + "&q=" + field.to_string();
    const std::string source = config_.base_url + query + " fetched " + utc_now();
    std::vector<CandidateRecord> records;
    std::size_t offset = 0;
    for (int page = 0; page < kMaxPages; ++page) {
        const std::string body = get_with_retry(query + "&_format=json&_fields=label,poly,has_jacobian,jacobian_count" +
                                                "&_offset=" + std::to_string(offset));
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ResponseShape, std::string("response is not JSON: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("data") || !doc["data"].is_array())
            throw Error(ErrorKind::ResponseShape, "response lacks a \"data\" array");
        const auto& data = doc["data"];
        for (const auto& item : data) records.push_back(normalize(item, field, genus, source));
        const auto next = doc.find("next");
        if (data.empty() || next == doc.end() || !next->is_string() || next->get<std::string>().empty()) break;
        offset += data.size();
    }

    if (cached) write_cache(cache_path(field, genus), records, source);
    return records;
}

std::vector<CandidateRecord> fetch_candidates(std::uint64_t q, int genus, const FetchConfig& config) {
    LmfdbClient client(config);
    return client.fetch_candidates(q, genus);
}

}  // namespace abcover

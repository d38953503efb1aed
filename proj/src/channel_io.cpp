// SPDX-License-Identifier: Apache-2.0
//
// wiretap: secrecy-rate toolkit for complex MIMO wiretap channels
// Copyright (C) 2026 The wiretap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "wiretap/channel_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wiretap
{
    using nlohmann::json;

    namespace
    {
        std::string read_file(const std::filesystem::path &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw ConfigError("cannot open '" + path.string() + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }

        json parse_document(std::string_view text)
        {
            try
            {
                return json::parse(text.begin(), text.end());
            }
            catch (const json::parse_error &e)
            {
                const auto upto = std::min<std::size_t>(e.byte, text.size());
                const auto line = 1 + std::count(text.begin(), text.begin() + std::ptrdiff_t(upto), '\n');
                throw ConfigError("parse error at line " + std::to_string(line) + ": " + e.what());
            }
        }

        ComplexMatrix read_matrix(const json &doc, const std::string &field)
        {
            if (!doc.contains(field))
                throw ConfigError("missing field '" + field + "'");
            const json &rows = doc.at(field);
            if (!rows.is_array() || rows.empty())
                throw ConfigError("field '" + field + "' must be a non-empty array of rows");
            const std::size_t ncols = rows.front().is_array() ? rows.front().size() : 0;
            if (ncols == 0)
                throw ConfigError("field '" + field + "' has an empty first row");
            ComplexMatrix M(Index(rows.size()), Index(ncols));
            for (std::size_t i = 0; i < rows.size(); ++i)
            {
                const json &row = rows[i];
                if (!row.is_array() || row.size() != ncols)
                    throw ConfigError("field '" + field + "' row " + std::to_string(i) + " has inconsistent length");
                for (std::size_t j = 0; j < ncols; ++j)
                {
                    const json &e = row[j];
                    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                        throw ConfigError("field '" + field + "' entry [" + std::to_string(i) + "][" + std::to_string(j) +
                                          "] must be a [re, im] pair");
                    M(Index(i), Index(j)) = Complex(e[0].get<double>(), e[1].get<double>());
                }
            }
            return M;
        }

        json write_matrix(const ComplexMatrix &M)
        {
            json rows = json::array();
            for (Index i = 0; i < M.rows(); ++i)
            {
                json row = json::array();
                for (Index j = 0; j < M.cols(); ++j)
                    row.push_back({M(i, j).real(), M(i, j).imag()});
                rows.push_back(std::move(row));
            }
            return rows;
        }

        void write_file(const std::filesystem::path &path, const std::string &text)
        {
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw ConfigError("cannot write '" + path.string() + "'");
            out << text;
        }
    }

    ChannelPair parse_channel(std::string_view text)
    {
        if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
            throw ConfigError("channel file is empty");
        json doc = parse_document(text);
        if (!doc.is_object())
            throw ConfigError("channel file must hold a JSON object");
        return ChannelPair(read_matrix(doc, "H_r"), read_matrix(doc, "H_e"));
    }

    ChannelPair load_channel(const std::filesystem::path &path)
    {
        return parse_channel(read_file(path));
    }

    std::string serialize_channel(const ChannelPair &ch)
    {
        json doc;
        doc["H_r"] = write_matrix(ch.legitimate());
        doc["H_e"] = write_matrix(ch.eavesdropper());
        return doc.dump(2) + "\n";
    }

    void save_channel(const std::filesystem::path &path, const ChannelPair &ch)
    {
        write_file(path, serialize_channel(ch));
    }

    AugmentedCovariance parse_covariance(std::string_view text)
    {
        if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
            throw ConfigError("covariance file is empty");
        json doc = parse_document(text);
        if (!doc.is_object())
            throw ConfigError("covariance file must hold a JSON object");
        ComplexMatrix K = read_matrix(doc, "K");
        if (K.rows() != K.cols())
            throw DimensionError("K must be square");
        ComplexMatrix Kt = doc.contains("K_tilde") ? read_matrix(doc, "K_tilde") : ComplexMatrix::Zero(K.rows(), K.cols());
        return validate_augmented(HermitianMatrix(K), Kt);
    }

    AugmentedCovariance load_covariance(const std::filesystem::path &path)
    {
        return parse_covariance(read_file(path));
    }

    std::string serialize_covariance(const AugmentedCovariance &aug)
    {
        json doc;
        doc["K"] = write_matrix(aug.covariance().matrix());
        doc["K_tilde"] = write_matrix(aug.pseudo_covariance());
        return doc.dump(2) + "\n";
    }
}

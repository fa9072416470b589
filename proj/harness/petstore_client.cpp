// SPDX-License-Identifier: Apache-2.0
// Conformance client for the Petstore scenarios. Built against a generated native-host project:
// every request goes through the generated services, nothing here talks HTTP directly.
//
//   petstore_client --base-url URL --case N --method M --endpoint E --input JSON
//
// Prints {"status":<int>,"body":<string>} where body is the raw response text. Before printing,
// the decoded response is serialized again and compared with the raw body so a decoding
// mistake fails the case even when the bytes on the wire were right.
#include <cstdio>
#include <cstring>
#include <iostream>
#include <list>
#include <string>
#include <system_error>

#include "bourne/json.hpp"
#include "JsonCodec.h"
#include "PetService.h"
#include "UserService.h"

namespace {

std::string quoted(const std::string &text)
{
    return bourne::json(text).dump();
}

/// Object members compare by name, everything else structurally.
bool sameJson(const bourne::json &a, const bourne::json &b)
{
    if (a.is_object() && b.is_object()) {
        if (a.size() != b.size()) return false;
        for (const auto &member : a.object_range())
            if (!b.has_key(member.first) || !sameJson(member.second, b[member.first])) return false;
        return true;
    }
    if (a.is_array() && b.is_array()) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!sameJson(a[i], b[i])) return false;
        return true;
    }
    return a == b;
}

int fail(const std::string &message)
{
    std::cerr << "petstore_client: " << message << "\n";
    return 2;
}

template <typename T>
int report(const Tiny::Response<T> &response, const std::string &raw)
{
    if (response.statusCode >= 200 && response.statusCode < 300) {
        std::error_code error;
        bourne::json wire = bourne::json::parse(raw, error);
        if (error) return fail("response body is not JSON: " + raw);
        bourne::json decoded = Tiny::jsonOf(response.data);
        if (!sameJson(decoded, wire)) return fail("decoded response " + decoded.dump() + " differs from " + raw);
    }
    std::cout << "{\"status\":" << response.statusCode << ",\"body\":" << quoted(raw) << "}" << std::endl;
    return 0;
}

int report(const Tiny::Response<std::string> &response, const std::string &raw)
{
    if (response.statusCode >= 200 && response.statusCode < 300 && response.data != raw)
        return fail("text response decoded as " + quoted(response.data) + ", raw body " + quoted(raw));
    std::cout << "{\"status\":" << response.statusCode << ",\"body\":" << quoted(raw) << "}" << std::endl;
    return 0;
}

long long integerArgument(const bourne::json &value)
{
    return value.is_string() ? std::stoll(value.to_string()) : value.to_int();
}

}  // namespace

int main(int argc, char **argv)
{
    std::string baseUrl, method, endpoint, inputText = "{}";
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--base-url") baseUrl = argv[i + 1];
        else if (flag == "--method") method = argv[i + 1];
        else if (flag == "--endpoint") endpoint = argv[i + 1];
        else if (flag == "--input") inputText = argv[i + 1];
        else if (flag != "--case") return fail("unknown flag " + flag);
    }
    if (baseUrl.empty() || method.empty() || endpoint.empty()) return fail("--base-url, --method and --endpoint are required");

    std::error_code error;
    bourne::json input = bourne::json::parse(inputText, error);
    if (error) return fail("--input is not JSON");

    Tiny::PetService pets(baseUrl);
    Tiny::UserService users(baseUrl);

    if (endpoint == "/pet" && (method == "PUT" || method == "POST")) {
        Tiny::Pet pet;
        pet.fromJson(input["body"]);
        Tiny::Response<Tiny::Pet> response = method == "PUT" ? pets.updatePet(pet) : pets.addPet(pet);
        return report(response, pets.lastResponseBody());
    }
    if (endpoint == "/user/createWithList" && method == "POST") {
        std::list<Tiny::User> list;
        Tiny::readJson(input["body"], list);
        Tiny::Response<std::list<Tiny::User> > response = users.createUsersWithListInput(list);
        return report(response, users.lastResponseBody());
    }
    if (endpoint == "/pet/findByStatus" && method == "GET") {
        Tiny::Response<std::list<Tiny::Pet> > response = pets.findPetsByStatus(input["query"]["status"].to_string());
        return report(response, pets.lastResponseBody());
    }
    if (endpoint == "/pet/{petId}" && method == "GET") {
        Tiny::Response<Tiny::Pet> response = pets.getPetById(integerArgument(input["path"]["petId"]));
        return report(response, pets.lastResponseBody());
    }
    if (endpoint == "/pet/{petId}" && method == "DELETE") {
        Tiny::Response<std::string> response = pets.deletePet(integerArgument(input["path"]["petId"]));
        return report(response, pets.lastResponseBody());
    }
    return fail("no generated operation for " + method + " " + endpoint);
}

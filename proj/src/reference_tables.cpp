#include "cycov/reference.hpp"

namespace cycov {

const std::vector<PublishedCover>& published_triples()
{
    static const std::vector<PublishedCover> rows = {
        {7, {1, 1, 5}, 3},   {7, {1, 2, 4}, 3},   {8, {1, 1, 6}, 3},   {8, {1, 2, 5}, 3},    {9, {1, 1, 7}, 4},
        {9, {1, 2, 6}, 3},   {10, {1, 1, 8}, 4},  {10, {1, 2, 7}, 4},  {11, {1, 1, 9}, 5},   {11, {1, 2, 8}, 5},
        {12, {1, 1, 10}, 5}, {12, {1, 2, 9}, 4},  {12, {1, 3, 8}, 3},  {12, {1, 4, 7}, 4},   {12, {1, 5, 6}, 3},
        {14, {1, 6, 7}, 3},  {15, {1, 4, 10}, 5}, {15, {1, 5, 9}, 4},  {16, {1, 7, 8}, 4},   {18, {1, 8, 9}, 4},
        {20, {1, 9, 10}, 5}, {22, {1, 10, 11}, 5},
    };
    return rows;
}

std::vector<PublishedCover> published_table(long genus)
{
    switch (genus) {
    case 3:
        return {{7, {1, 1, 5}, 3},       {7, {1, 2, 4}, 3},          {8, {1, 1, 6}, 3},
                {8, {1, 2, 5}, 3},       {9, {1, 2, 6}, 3},          {12, {1, 3, 8}, 3},
                {12, {1, 5, 6}, 3},      {14, {1, 6, 7}, 3},         {4, {1, 1, 1, 1}, 3},
                {4, {1, 1, 3, 3}, 3},    {6, {1, 3, 3, 5}, 3},       {6, {1, 3, 4, 4}, 3},
                {3, {1, 1, 1, 1, 2}, 3}, {4, {1, 1, 2, 2, 2}, 3},    {2, {1, 1, 1, 1, 1, 1, 1, 1}, 3}};
    case 4:
        return {{9, {1, 1, 7}, 4},          {10, {1, 1, 8}, 4},          {10, {1, 2, 7}, 4},
                {12, {1, 2, 9}, 4},         {12, {1, 4, 7}, 4},          {15, {1, 5, 9}, 4},
                {16, {1, 7, 8}, 4},         {18, {1, 8, 9}, 4},          {4, {1, 1, 1, 2, 3}, 4},
                {6, {1, 2, 3, 3, 3}, 4},    {6, {2, 2, 2, 3, 3}, 4},     {5, {1, 1, 1, 2}, 4},
                {5, {1, 1, 4, 4}, 4},       {5, {1, 2, 3, 4}, 4},        {6, {1, 1, 2, 2}, 4},
                {6, {1, 2, 4, 5}, 4},       {8, {1, 4, 4, 7}, 4},        {10, {2, 5, 5, 8}, 4},
                {3, {1, 1, 1, 1, 1, 1}, 4}, {3, {1, 1, 1, 2, 2, 2}, 4},  {4, {1, 2, 2, 2, 2, 3}, 4},
                {2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 4}};
    case 5:
        return {{11, {1, 1, 9}, 5},          {11, {1, 2, 8}, 5},         {12, {1, 1, 10}, 5},
                {15, {1, 4, 10}, 5},         {20, {1, 9, 10}, 5},        {22, {1, 10, 11}, 5},
                {6, {1, 1, 5, 5}, 5},        {8, {1, 1, 2, 4}, 5},       {10, {1, 5, 5, 9}, 5},
                {6, {1, 1, 3, 3, 4}, 5},     {6, {1, 2, 2, 3, 4}, 5},    {4, {1, 1, 1, 1, 2, 2}, 5},
                {4, {1, 1, 2, 2, 3, 3}, 5},  {6, {2, 3, 3, 3, 3, 4}, 5}, {3, {1, 1, 1, 1, 1, 2, 2}, 5},
                {4, {1, 1, 2, 2, 2, 2, 2}, 5}, {2, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 5}};
    default:
        return {};
    }
}

std::vector<PublishedCover> published_table_omissions(long genus)
{
    if (genus == 4) return {{6, {1, 1, 1, 3}, 4}};
    if (genus == 5) return {{8, {1, 4, 5, 6}, 5}};
    return {};
}

}  // namespace cycov

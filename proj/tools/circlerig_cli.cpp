#include <cstdio>

int main() {
    std::puts("circlerig: not wired up yet");
    return 2;
}

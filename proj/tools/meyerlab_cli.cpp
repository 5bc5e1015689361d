// placeholder; real CLI lands with the scenario layer
int main() { return 2; }

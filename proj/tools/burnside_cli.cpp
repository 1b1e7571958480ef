// CLI entry point; subcommands land with the top-level modules.
int main() { return 0; }

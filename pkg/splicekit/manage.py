#!/usr/bin/env python
"""Django's command-line utility for administrative tasks."""
import os
import sys

EX_USAGE = 64


def main():
    """Run administrative tasks."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'splicekit.settings')
    try:
        import django
        from django.core.management import execute_from_command_line, get_commands
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    django.setup()
    subcommand = sys.argv[1] if len(sys.argv) > 1 else 'help'
    if not subcommand.startswith('-') and subcommand != 'help' and subcommand not in get_commands():
        sys.stderr.write(f"Comando desconhecido: {subcommand!r}. Use 'manage.py help'.\n")
        sys.exit(EX_USAGE)
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()

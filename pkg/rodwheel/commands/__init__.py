from .audit import Command as AuditCommand
from .base import EXIT_ERROR, EXIT_FALL, EXIT_OK, BaseCommand
from .scenarios import Command as ScenariosCommand
from .simulate import Command as SimulateCommand
from .sweep import Command as SweepCommand


COMMANDS = {
    "simulate": SimulateCommand,
    "audit": AuditCommand,
    "sweep": SweepCommand,
    "scenarios": ScenariosCommand,
}


__all__ = [
    "AuditCommand",
    "BaseCommand",
    "COMMANDS",
    "EXIT_ERROR",
    "EXIT_FALL",
    "EXIT_OK",
    "ScenariosCommand",
    "SimulateCommand",
    "SweepCommand",
]

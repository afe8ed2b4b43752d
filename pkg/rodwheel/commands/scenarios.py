from ..scenario import describe_bundled_scenarios
from .base import EXIT_OK, BaseCommand


class Command(BaseCommand):
    help = "Lists the bundled scenarios"

    def handle(self, *args, **options):
        for (name, description) in describe_bundled_scenarios():
            self.stdout.write(f"{name:<20} {description}")

        return EXIT_OK

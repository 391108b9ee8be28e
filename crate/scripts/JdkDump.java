import java.net.URI;
import java.nio.file.*;
import java.util.*;
import java.util.zip.*;
import java.io.*;

public class JdkDump {
  public static void main(String[] args) throws Exception {
    FileSystem fs = FileSystems.getFileSystem(URI.create("jrt:/"));
    Set<String> pkgs = new HashSet<>(Arrays.asList(args).subList(1, args.length));
    try (ZipOutputStream out = new ZipOutputStream(new FileOutputStream(args[0]))) {
      Path modules = fs.getPath("/modules");
      try (DirectoryStream<Path> mods = Files.newDirectoryStream(modules)) {
        for (Path mod : mods) {
          Files.walk(mod).filter(p -> p.toString().endsWith(".class")).sorted().forEach(p -> {
            String rel = mod.relativize(p).toString();
            int slash = rel.lastIndexOf('/');
            String pkg = slash < 0 ? "" : rel.substring(0, slash).replace('/', '.');
            if (!pkgs.contains(pkg)) return;
            try {
              out.putNextEntry(new ZipEntry(rel));
              out.write(Files.readAllBytes(p));
              out.closeEntry();
            } catch (IOException e) { throw new UncheckedIOException(e); }
          });
        }
      }
    }
  }
}

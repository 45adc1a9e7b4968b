package org.context.account;

import java.util.List;

/* and cached and */
public class Path4 {
    private static final int TOTAL_REMOTE_WORKER = 8;
    private double managerRemoteClient = 1.0;
    private int itemHandler = 5;
    private String indexActiveIndex = "new new result to";
    private int workerFileRequest = 5;
    private int event = 5;

    /** when returns to */
    public String clearIndexActiveIndex(String result) {
        String view = result;
        this.indexActiveIndex = view;
        return view;
    }

}
